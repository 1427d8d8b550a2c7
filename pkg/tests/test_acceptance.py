"""Exit criteria. Every check is exact (rational arithmetic, tolerance zero).

Each test records one PASS/FAIL line, printed in the terminal summary.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import product
from math import comb

import numpy as np
import pytest

from orbitquant import HPoly, Orbit, Poly, poisson_bracket, sl2, sl3
from orbitquant.orbit import QuantizedOrbitAlgebra, hilbert_check, quotient_axiom_check
from orbitquant.star import (
    StarProduct,
    check_associativity,
    check_axiom_a,
    check_axiom_b,
    extract_cochain,
    gauge_transform,
    intertwine_check,
    orbit_closure_witness,
)
from orbitquant.su2rep import build_irrep, evaluate, fuzzy_sphere_algebra, kernel_and_span_check
from orbitquant.uh import UhElement, centrality_check, is_sorted, pbw_normal_form, symmetrize

from conftest import ACCEPTANCE_LINES, monos

h = HPoly.h()


def record(number, text, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {text}"
    if detail:
        line += f"  [{detail}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_01_deformation_axioms():
    L = sl2()
    mons = monos(3, 4)
    start = time.perf_counter()
    bad = [
        (o, a, b)
        for o in ("pbw", "sym")
        for a, b in product(mons, repeat=2)
        if not (check_axiom_a(StarProduct(L, o), a, b) and check_axiom_b(StarProduct(L, o), a, b, L))
    ]
    elapsed = time.perf_counter() - start
    record(1, "axioms a and b, sl2, PBW and SYM, all monomial pairs of degree <= 4",
           not bad and elapsed < 60, f"{2 * len(mons) ** 2} pairs, {elapsed:.1f}s")


def test_02_exact_associativity():
    L = sl2()
    rng = random.Random(2024)
    small = monos(3, 2)
    pool = monos(3, 3)
    random_triples = [tuple(rng.choice(pool) for _ in range(3)) for _ in range(100)]
    bad = []
    for o in ("pbw", "sym"):
        sp = StarProduct(L, o)
        for a, b, c in list(product(small, repeat=3)) + random_triples:
            if not check_associativity(sp, a, b, c):
                bad.append((o, a, b, c))
    record(2, "exact associativity, degree <= 2 triples and 100 random degree <= 3 triples",
           not bad, f"{2 * (len(small) ** 3 + 100)} triples")


def test_03_first_order_bracket():
    L = sl2()
    mons = monos(3, 3)
    bad = []
    for o in ("pbw", "sym"):
        sp = StarProduct(L, o)
        for a, b in product(mons, repeat=2):
            c1 = extract_cochain(sp, 1, a, b).value - extract_cochain(sp, 1, b, a).value
            if c1 != poisson_bracket(a, b, L):
                bad.append((o, a, b))
    record(3, "C1(a,b) - C1(b,a) = {a,b}, sl2 pairs of degree <= 3", not bad)


def test_04_gauge_equivalence():
    L = sl2()
    sym, pbw = StarProduct(L, "sym"), StarProduct(L, "pbw")
    mons = monos(3, 3)
    xH, xX, xY = (L.var(i) for i in range(3))
    t0 = all(gauge_transform(sym, pbw, f).truncate_h(1) == f for f in monos(3, 4))
    inter = all(intertwine_check(sym, pbw, a, b) for a, b in product(mons, repeat=2))
    exact = gauge_transform(sym, pbw, xX * xY) == xX * xY - xH * (h / 2)
    record(4, "gauge equivalence: T0 = id, intertwining on degree <= 3 pairs, T(xX*xY) = xX*xY - h/2*xH",
           t0 and inter and exact)


def test_05_casimir():
    L = sl2()
    P = symmetrize(L.invariants[0], L)
    H, X, Y = 0, 1, 2
    expected = UhElement(L, {(H, H): Fraction(1, 4), (X, Y): 1, (H,): -h / 2})
    L3 = sl3()
    ok = P == expected and centrality_check(P, L) and centrality_check(symmetrize(L3.invariants[0], L3), L3)
    record(5, "Sym(xX*xY + 1/4*xH^2) = 1/4*H^2 + X*Y - h/2*H, central; sl3 quadratic Casimir central",
           ok, P.to_str())


def test_06_orbit_restriction_failure():
    L = sl2()
    w = orbit_closure_witness(StarProduct(L, "sym"), Orbit(L, [1]), 1)
    xH = L.var(0)
    ok = w is not None and w.a == xH and w.remainder == xH * (h * h / 3)
    record(6, "witness search, sl2/SYM, degree 1: a = xH, remainder 1/3*h^2*xH", ok,
           f"a={w.a.to_str(L.names)}, remainder={w.remainder.to_str(L.names)}" if w else "no witness")


def test_07_module_isomorphism():
    L = sl2()
    Q = QuantizedOrbitAlgebra(Orbit(L, [1]), [HPoly([1, 1])])
    rows = hilbert_check(Q, 6)
    target = [1, 4, 9, 16, 25, 36, 49]
    ok = [q for _, q, _ in rows] == target and [c for _, _, c in rows] == target
    record(7, "Hilbert counts (1, 4, 9, 16, 25, 36, 49) on quotient and classical sides", ok,
           " ".join(f"{q}/{c}" for _, q, c in rows))


def test_08_quotient_axioms():
    L = sl2()
    rng = random.Random(8)
    ok = True
    shifts = []
    for _ in range(4):
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        shift = HPoly([c] + [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))])
        shifts.append(str(shift))
        report = quotient_axiom_check(QuantizedOrbitAlgebra(Orbit(L, [c]), [shift]), 3)
        ok = ok and report.passed
    record(8, "quotient deformation axioms, sl2, degree <= 3, sampled shifts with C(0) = c", ok, "; ".join(shifts))


def test_09_geometric_quantization():
    L = sl2()
    P = symmetrize(L.invariants[0], L)
    ok = True
    for m in range(1, 7):
        for hbar in (Fraction(1), Fraction(1, 2)):
            l = hbar * m / 2
            rep = build_irrep(m, hbar)
            ok = ok and (evaluate(P, rep) == l * (l + hbar) * np.eye(m + 1, dtype=int)).all()
            if m <= 4:
                good = kernel_and_span_check(fuzzy_sphere_algebra(m, hbar), rep, m)
                wrong = kernel_and_span_check(fuzzy_sphere_algebra(m, hbar, HPoly([l * l])), rep, m)
                ok = ok and good.kernel and good.spans[-1][1] == (m + 1) ** 2 and not wrong.kernel
    record(9, "Casimir = l(l+hbar) for m <= 6; I_h in kernel and full matrix span for m <= 4; wrong shift fails",
           bool(ok))


def test_10_rewriting_soundness():
    L, L3 = sl2(), sl3()
    ok = all(
        pbw_normal_form(L, w, "leftmost") == pbw_normal_form(L, w, "rightmost")
        for k in range(6)
        for w in product(range(3), repeat=k)
    )
    rng = random.Random(10)
    for _ in range(200):
        w = tuple(rng.randrange(8) for _ in range(rng.randint(0, 4)))
        ok = ok and pbw_normal_form(L3, w, "leftmost") == pbw_normal_form(L3, w, "rightmost")
    counts = all(
        sum(1 for w in product(range(3), repeat=d) if is_sorted(w)) == comb(3 + d - 1, d)
        for d in range(7)
    )
    record(10, "leftmost = rightmost normal forms (sl2 exhaustive <= 5, 200 sl3 words <= 4); PBW counts d <= 6",
           ok and counts)


CLI_CASES = [
    (["star", "--algebra", "sl2", "--ordering", "sym", "--a", "xX", "--b", "xY"], 0, "xX*xY + 1/2*h*xH\n"),
    (["check", "--algebra", "sl2", "--suite", "axioms", "--max-degree", "4"], 0, None),
    (["rep-check", "--m", "1", "--hbar", "1", "--shift", "wrong"], 1, None),
]


def test_11_cli_contract():
    ok = True
    for argv, code, expected in CLI_CASES:
        runs = [
            subprocess.run([sys.executable, "-m", "orbitquant", *argv], capture_output=True, check=False)
            for _ in range(2)
        ]
        ok = ok and all(r.returncode == code for r in runs) and runs[0].stdout == runs[1].stdout
        if expected is not None:
            ok = ok and runs[0].stdout.decode() == expected
    fail_out = runs[0].stdout.decode()
    ok = ok and "kernel: FAIL" in fail_out
    record(11, "CLI examples: outputs and exit codes (0, 0, 1), byte-identical across two runs", ok)

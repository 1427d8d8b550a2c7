"""Command-line front end: ``orbitquant <command> [flags]``.

Exit codes: 0 computed / all checks pass, 1 a check failed, 2 usage or parse
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product

from . import su2rep
from .orbit import NotCentral, QuantizedOrbitAlgebra, ReductionBoundExceeded, hilbert_check
from .parsing import (
    ExpressionSyntaxError,
    FormatError,
    UnknownIdentifier,
    load_algebra,
    parse_expression,
    parse_hpoly,
    parse_uh_expression,
)
from .poly import GroebnerIncomplete, Orbit, Poly, monomials, poisson_bracket, sample_orbit
from .scalars import format_rational, to_rational
from .star import (
    StarProduct,
    check_axiom_a,
    check_axiom_b,
    extract_cochain,
    gauge_transform,
    intertwine_check,
    orbit_closure_witness,
)
from .uh import centrality_check, symmetrize

__all__ = ["run", "main", "build_parser"]

SUITES = ("axioms", "assoc", "equivalence", "centrality", "hilbert", "witness")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    parser = _ArgumentParser(prog="orbitquant", description="Deformation quantization of coadjoint orbits.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p, ordering=True):
        p.add_argument("--algebra", default="sl2", help="sl2, so3, sl3 or a config file")
        if ordering:
            p.add_argument("--ordering", choices=("pbw", "sym"), default=None)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("normal-form", help="PBW normal form of a noncommutative expression")
    common(p)
    p.add_argument("--a", required=True)

    for name, helptext in (("star", "star product of two polynomials"), ("cochain", "cochains C^n(a, b)")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        if name == "star":
            p.add_argument("--c", default=None, help="optional third factor, (a*b)*c")
        else:
            p.add_argument("--max-degree", type=int, default=None, help="highest h-order to print")

    p = sub.add_parser("check", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--constants", default=None)

    p = sub.add_parser("quantize", help="build U_h/I_h and report its canonical basis")
    common(p, ordering=False)
    p.add_argument("--constants", default=None)
    p.add_argument("--shift", default=None)
    p.add_argument("--max-degree", type=int, default=3)

    p = sub.add_parser("rep-check", help="sl2 irrep cross-check of the Casimir shift")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--hbar", default="1")
    p.add_argument("--shift", default="correct", help="'correct' (l^2 + l*h), 'wrong' (l^2) or an h-polynomial")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# -- helpers --


def _orderings(args):
    return [args.ordering] if getattr(args, "ordering", None) else ["pbw", "sym"]


def _pstr(f: Poly, L) -> str:
    return f.to_str(L.names)


def _split(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _orbit(L, constants):
    if constants is None:
        return sample_orbit(L)
    cs = [to_rational(c) for c in _split(constants)]
    return Orbit(L, cs)


def _monos(L, d_max):
    return [Poly.monomial(e) for d in range(d_max + 1) for e in monomials(L.n, d)]


def _algebra_desc(L):
    return {"name": L.label, "dim": L.n, "rank": L.rank, "coordinates": list(L.names)}


# -- check suites --


def _suite_axioms(L, args):
    items = []
    mons = _monos(L, args.max_degree)
    for o in _orderings(args):
        sp = StarProduct(L, o)
        fail = None
        for a, b in product(mons, repeat=2):
            if not check_axiom_a(sp, a, b):
                fail = {"property": "a", "a": _pstr(a, L), "b": _pstr(b, L),
                        "discrepancy": _pstr((sp(a, b) - a * b).truncate_h(1), L)}
                break
            if not check_axiom_b(sp, a, b, L):
                comm = sp(a, b) - sp(b, a)
                fail = {"property": "b", "a": _pstr(a, L), "b": _pstr(b, L),
                        "discrepancy": _pstr(comm.h_coeff(1) - poisson_bracket(a, b, L), L)}
                break
        items.append(_item("axioms", L, o, args.max_degree, fail))
    return items


def _suite_assoc(L, args):
    items = []
    mons = _monos(L, args.max_degree)
    for o in _orderings(args):
        sp = StarProduct(L, o)
        fail = None
        for a, b, c in product(mons, repeat=3):
            left, right = sp(sp(a, b), c), sp(a, sp(b, c))
            if left != right:
                fail = {"a": _pstr(a, L), "b": _pstr(b, L), "c": _pstr(c, L), "discrepancy": _pstr(left - right, L)}
                break
        items.append(_item("assoc", L, o, args.max_degree, fail))
    return items


def _suite_equivalence(L, args):
    mons = _monos(L, args.max_degree)
    pbw, sym = StarProduct(L, "pbw"), StarProduct(L, "sym")
    fail = None
    for f in mons:
        t = gauge_transform(sym, pbw, f)
        if t.truncate_h(1) != f:
            fail = {"property": "T0 = id", "f": _pstr(f, L), "T(f)": _pstr(t, L)}
            break
        if gauge_transform(pbw, sym, t) != f:
            fail = {"property": "round trip", "f": _pstr(f, L)}
            break
    if fail is None:
        for a, b in product(mons, repeat=2):
            if not intertwine_check(sym, pbw, a, b):
                fail = {"property": "intertwine", "a": _pstr(a, L), "b": _pstr(b, L)}
                break
    return [_item("equivalence", L, "sym->pbw", args.max_degree, fail)]


def _suite_centrality(L, args):
    fail = None
    for p in L.invariants:
        P = symmetrize(p, L)
        if not centrality_check(P, L):
            fail = {"invariant": _pstr(p, L), "casimir": P.to_str()}
            break
    return [_item("centrality", L, "sym", max((p.degree for p in L.invariants), default=0), fail)]


def _suite_hilbert(L, args):
    try:
        Q = QuantizedOrbitAlgebra(_orbit(L, args.constants))
        rows = hilbert_check(Q, args.max_degree)
    except (GroebnerIncomplete, ReductionBoundExceeded) as exc:
        return [_item("hilbert", L, None, args.max_degree, {"error": str(exc)})]
    fail = next(({"degree": d, "quotient": q, "classical": c} for d, q, c in rows if q != c), None)
    item = _item("hilbert", L, None, args.max_degree, fail)
    item["table"] = [list(r) for r in rows]
    return [item]


def _suite_witness(L, args):
    items = []
    try:
        orb = _orbit(L, args.constants)
    except GroebnerIncomplete as exc:
        return [_item("witness", L, o, args.max_degree, {"error": str(exc)}) for o in _orderings(args)]
    for o in _orderings(args):
        w = orbit_closure_witness(StarProduct(L, o), orb, args.max_degree)
        if w is None:
            item = _item("witness", L, o, args.max_degree, {"error": "no witness: product restricted to the orbit"})
        else:
            item = _item("witness", L, o, args.max_degree, None)
            item["witness"] = {"a": _pstr(w.a, L), "invariant": w.index, "remainder": _pstr(w.remainder, L)}
        items.append(item)
    return items


def _item(name, L, ordering, degree, failure):
    return {
        "property": name,
        "algebra": L.label,
        "ordering": ordering,
        "degree_bound": degree,
        "passed": failure is None,
        "counterexample": failure,
    }


_SUITE_FUNCS = {
    "axioms": _suite_axioms,
    "assoc": _suite_assoc,
    "equivalence": _suite_equivalence,
    "centrality": _suite_centrality,
    "hilbert": _suite_hilbert,
    "witness": _suite_witness,
}


# -- commands --


def _cmd_normal_form(args):
    L = load_algebra(args.algebra)
    if args.ordering:
        sp = StarProduct(L, args.ordering)
        A = sp.quantize(parse_expression(args.a, L))
    else:
        A = parse_uh_expression(args.a, L)
    return {"normal_form": A.to_str()}, True, A.to_str()


def _cmd_star(args):
    L = load_algebra(args.algebra)
    sp = StarProduct(L, args.ordering or "sym")
    a, b = parse_expression(args.a, L), parse_expression(args.b, L)
    result = sp(a, b)
    if args.c is not None:
        result = sp(result, parse_expression(args.c, L))
    text = _pstr(result, L)
    return {"ordering": sp.ordering.value, "result": text}, True, text


def _cmd_cochain(args):
    L = load_algebra(args.algebra)
    sp = StarProduct(L, args.ordering or "sym")
    a, b = parse_expression(args.a, L), parse_expression(args.b, L)
    if not (a.is_h_free() and b.is_h_free()):
        raise UsageError("cochains are defined for h-free arguments")
    result = sp(a, b)
    top = result.h_degree if args.max_degree is None else args.max_degree
    rows = [(k, _pstr(extract_cochain(sp, k, a, b).value, L)) for k in range(max(top, 0) + 1)]
    text = "\n".join(f"C^{k}: {v}" for k, v in rows)
    return {"ordering": sp.ordering.value, "cochains": {str(k): v for k, v in rows}}, True, text


def _cmd_check(args):
    L = load_algebra(args.algebra)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    suites = SUITES if args.suite == "all" else (args.suite,)
    items = []
    for s in suites:
        items.extend(_SUITE_FUNCS[s](L, args))
    passed = all(i["passed"] for i in items)
    lines = []
    for i in items:
        status = "PASS" if i["passed"] else "FAIL"
        line = f"{status}  {i['property']:<12} {i['algebra']:<6} {str(i['ordering'] or '-'):<9} deg<={i['degree_bound']}"
        if i.get("witness"):
            w = i["witness"]
            line += f"  witness a={w['a']} remainder={w['remainder']}"
        if i.get("table"):
            line += "  " + " ".join(f"{q}/{c}" for _, q, c in i["table"])
        if i["counterexample"]:
            line += "  counterexample: " + json.dumps(i["counterexample"], sort_keys=True)
        lines.append(line)
    return {"checks": items}, passed, "\n".join(lines)


def _cmd_quantize(args):
    L = load_algebra(args.algebra)
    orb = _orbit(L, args.constants)
    shifts = None
    if args.shift is not None:
        shifts = [parse_hpoly(s) for s in _split(args.shift)]
    try:
        Q = QuantizedOrbitAlgebra(orb, shifts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = hilbert_check(Q, args.max_degree)
    basis = {str(d): [_word_str(L, w) for w in Q.canonical_words(d)] for d in range(args.max_degree + 1)}
    passed = all(q == c for _, q, c in rows)
    result = {
        "constants": [format_rational(c) for c in orb.constants],
        "shifts": [str(s) for s in Q.shifts.values],
        "casimirs": [P.to_str() for P in Q.casimirs],
        "rules": Q.rule_strings(),
        "basis": basis,
        "hilbert": [list(r) for r in rows],
    }
    lines = [f"orbit: {', '.join(result['constants'])}", f"shifts: {', '.join(result['shifts'])}"]
    lines += [f"casimir: {c}" for c in result["casimirs"]]
    lines += [f"rule: {r}" for r in result["rules"]]
    lines += [f"basis[{d}]: {' '.join(ws)}" for d, ws in basis.items()]
    lines.append("hilbert (d quotient classical): " + "; ".join(f"{d} {q} {c}" for d, q, c in rows))
    return result, passed, "\n".join(lines)


def _word_str(L, w):
    from .uh import UhElement
    from .scalars import HPoly

    return UhElement._raw(L, {w: HPoly.const(1)}).to_str()


def _cmd_rep_check(args):
    if args.m < 0:
        raise UsageError("--m must be nonnegative")
    hbar = to_rational(args.hbar)
    if hbar == 0:
        raise UsageError("--hbar must be nonzero")
    l = hbar * args.m / 2
    if args.shift == "correct":
        shift = su2rep.fuzzy_sphere_shift(args.m, hbar)
    elif args.shift == "wrong":
        shift = parse_hpoly(format_rational(l * l))
    else:
        shift = parse_hpoly(args.shift)
    try:
        Q = su2rep.fuzzy_sphere_algebra(args.m, hbar, shift)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = su2rep.build_irrep(args.m, hbar)
    d = args.m if args.max_degree is None else args.max_degree
    report = su2rep.kernel_and_span_check(Q, rep, d)
    result = {
        "m": args.m,
        "hbar": format_rational(hbar),
        "shift": str(shift),
        "C_expected": format_rational(report.expected),
        "C_computed": format_rational(report.computed),
        "kernel": report.kernel,
        "span": [{"degree": deg, "rank": r, "target": t} for deg, r, t in report.spans],
    }
    lines = [
        f"m={args.m} hbar={result['hbar']} shift={result['shift']}",
        f"casimir eigenvalue: expected {result['C_expected']}, computed {result['C_computed']}",
        f"kernel: {'PASS' if report.kernel else 'FAIL'}",
    ]
    if not report.kernel:
        gap = su2rep.evaluate(Q.generators[0], rep)
        lines.append(f"  P - C(h) evaluates to {format_rational(gap[0, 0])} * Identity")
        result["kernel_discrepancy"] = format_rational(gap[0, 0])
    lines += [f"span degree<={deg}: rank {r} of {t}" for deg, r, t in report.spans]
    return result, report.passed, "\n".join(lines)


_COMMANDS = {
    "normal-form": _cmd_normal_form,
    "star": _cmd_star,
    "cochain": _cmd_cochain,
    "check": _cmd_check,
    "quantize": _cmd_quantize,
    "rep-check": _cmd_rep_check,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        result, passed, text = _COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (su2rep.RelationViolation, su2rep.NotScalar, NotCentral, AssertionError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return 3
    except (GroebnerIncomplete, ReductionBoundExceeded) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (UsageError, ValueError, TypeError) as exc:
        # parse errors, bad configs, invalid orbits and shifts all derive from ValueError
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    if args.format == "json":
        report = {"command": argv, "result": result, "passed": passed}
        if hasattr(args, "algebra"):
            report["algebra"] = _algebra_desc(load_algebra(args.algebra))
        print(json.dumps(report, sort_keys=True, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return 0 if passed else 1


def main():
    sys.exit(run())

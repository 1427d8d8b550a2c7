import random
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given, settings

from orbitquant import HPoly, Poly, UhElement, sl2
from orbitquant.uh import (
    centrality_check,
    generator,
    is_sorted,
    pbw_normal_form,
    psi_pbw,
    psi_pbw_inv,
    symmetrize,
    symmetrize_inv,
    uh_mul,
    word,
)

from conftest import monos, polys

h = HPoly.h()
H, X, Y = 0, 1, 2


def el(L, terms):
    return UhElement(L, {tuple(L.index(g) for g in w): c for w, c in terms.items()})


def sym_oracle(L, exp):
    """(1/k!) sum over all k! orderings, each normalized by leftmost rewriting."""
    letters = [i for i, e in enumerate(exp) for _ in range(e)]
    k = len(letters)
    total = pbw_normal_form(L, [(p, Fraction(1, factorial(k))) for p in permutations(letters)], "leftmost")
    return total


def test_normal_form_examples(L):
    assert pbw_normal_form(L, (Y, X)) == el(L, {"XY": 1, "H": -h})
    assert pbw_normal_form(L, (X, Y)) == el(L, {"XY": 1})
    assert pbw_normal_form(L, (Y, X, X)) == el(L, {"XXY": 1, "HX": -2 * h, "X": 2 * h * h})


def test_uh_mul_examples(L):
    gH, gX, gY = (generator(L, i) for i in range(3))
    assert gH * gX == el(L, {"HX": 1})
    assert gX * gH == el(L, {"HX": 1, "X": -2 * h})
    assert (gX * gY) * gH == gX * (gY * gH)


def test_psi_pbw_examples(L, x):
    xH, xX, xY = x
    assert psi_pbw(xH * xX, L) == el(L, {"HX": 1})
    assert psi_pbw(xX**2 * xY, L) == el(L, {"XXY": 1})
    assert psi_pbw(Poly.const(3, 1), L) == UhElement.one(L)
    assert psi_pbw_inv(el(L, {"HX": 1})) == xH * xX
    assert psi_pbw_inv(el(L, {"XY": 1, "H": -h})) == xX * xY - xH * h
    assert psi_pbw_inv(UhElement.one(L)) == Poly.const(3, 1)


def test_symmetrize_examples(L, x):
    xH, xX, xY = x
    assert symmetrize(xX * xY, L) == el(L, {"XY": 1, "H": -h / 2})
    assert symmetrize(xH**3, L) == el(L, {"HHH": 1})
    assert symmetrize(xH * xX * xY, L) == el(L, {"HXY": 1, "HH": -h / 2, "H": -h * h / 3})


@pytest.mark.parametrize("d", range(5))
def test_symmetrize_matches_permutation_oracle(L, d):
    for f in monos(3, d):
        if f.degree == d:
            (exp,) = f.terms
            assert symmetrize(f, L) == sym_oracle(L, exp)


def test_symmetrize_matches_oracle_sl3(L3):
    rng = random.Random(7)
    for _ in range(15):
        exp = [0] * 8
        for _ in range(rng.randint(1, 4)):
            exp[rng.randrange(8)] += 1
        assert symmetrize(Poly.monomial(exp), L3) == sym_oracle(L3, tuple(exp))


def test_symmetrize_inv_examples(L, x):
    xH, xX, xY = x
    assert symmetrize_inv(el(L, {"XY": 1})) == xX * xY + xH * (h / 2)
    for i in range(3):
        assert symmetrize_inv(generator(L, i)) == L.var(i)


def test_symmetrize_round_trips(L):
    for f in monos(3, 4):
        assert symmetrize_inv(symmetrize(f, L)) == f
    for f in monos(3, 4):
        A = psi_pbw(f, L)
        assert symmetrize(symmetrize_inv(A), L) == A


def test_centrality_examples(L):
    P = symmetrize(L.invariants[0], L)
    assert P == el(L, {"HH": Fraction(1, 4), "XY": 1, "H": -h / 2})
    assert centrality_check(P, L)
    assert not centrality_check(generator(L, H), L)
    assert centrality_check(UhElement.one(L), L)


def test_casimirs_of_builtins_are_central(L3, S3):
    for A in (L3, S3):
        for p in A.invariants:
            assert centrality_check(symmetrize(p, A), A)


@pytest.mark.parametrize("length", range(6))
def test_strategies_agree_exhaustively_sl2(L, length):
    for w in product(range(3), repeat=length):
        left = pbw_normal_form(L, w, "leftmost")
        assert left == pbw_normal_form(L, w, "rightmost")
        assert left == pbw_normal_form(L, w, "recursive")


def test_strategies_agree_sampled_sl3(L3):
    rng = random.Random(11)
    for _ in range(200):
        w = tuple(rng.randrange(8) for _ in range(rng.randint(0, 4)))
        left = pbw_normal_form(L3, w, "leftmost")
        assert left == pbw_normal_form(L3, w, "rightmost") == pbw_normal_form(L3, w)


@pytest.mark.parametrize("d", range(7))
def test_pbw_basis_counts(L, d):
    sorted_words = {w for w in product(range(3), repeat=d) if is_sorted(w)}
    assert len(sorted_words) == comb(3 + d - 1, d) == len(monos(3, d)) - len(monos(3, d - 1) if d else [])
    if d <= 5:
        # the top-length words of all normal forms are exactly the sorted words
        tops = set()
        for w in product(range(3), repeat=d):
            tops |= {u for u in pbw_normal_form(L, w).terms if len(u) == d}
        assert tops == sorted_words


def test_uh_mul_associative_on_generators(L3):
    gens = [generator(L3, i) for i in range(8)]
    for a, b, c in product(gens, repeat=3):
        assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(polys(max_degree=3, h=True), polys(max_degree=3, h=True), polys(max_degree=3, h=True))
def test_uh_mul_associative_sampled(f, g, k):
    L = sl2()
    A, B, C = psi_pbw(f, L), psi_pbw(g, L), psi_pbw(k, L)
    assert uh_mul(uh_mul(A, B), C) == uh_mul(A, uh_mul(B, C))


@settings(max_examples=40, deadline=None)
@given(polys(max_degree=3), polys(max_degree=3))
def test_h_zero_gives_commutative_product(f, g):
    L = sl2()
    prod = psi_pbw_inv(uh_mul(psi_pbw(f, L), psi_pbw(g, L)))
    assert prod.truncate_h(1) == f * g


def test_word_helper_and_printing(L):
    assert word(L, "YXX").to_str() == "X^2*Y - 2*h*H*X + 2*h^2*X"
    assert str(UhElement.zero(L)) == "0"
    with pytest.raises(ValueError):
        UhElement(L, {(2, 1): 1})
    with pytest.raises(ValueError):
        pbw_normal_form(L, (3,))

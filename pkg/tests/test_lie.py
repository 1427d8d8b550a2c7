from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from orbitquant.lie import (
    AntisymmetryViolation,
    DegenerateKillingForm,
    JacobiViolation,
    killing_form,
    make_algebra,
    quadratic_invariant,
    regularity_check,
    sl3_matrices,
)
from orbitquant.poly import poisson_bracket

SL2_TABLE = {("xH", "xX"): {"xX": 2}, ("xH", "xY"): {"xY": -2}, ("xX", "xY"): {"xH": 1}}


def bracket_vec(L, u, v):
    """[u, v] for coefficient vectors, straight from the structure constants."""
    out = [Fraction(0)] * L.n
    for i, j in product(range(L.n), repeat=2):
        if u[i] and v[j]:
            for k, c in L.bracket(i, j).items():
                out[k] += u[i] * v[j] * c
    return out


def basis(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def test_sl2_builds(L):
    assert (L.n, L.rank, L.generators) == (3, 1, ("H", "X", "Y"))
    assert L == make_algebra(("xH", "xX", "xY"), SL2_TABLE, rank=1)


def test_abelian_is_rejected():
    with pytest.raises(DegenerateKillingForm):
        make_algebra(("xa", "xb", "xc"), {}, rank=1)


def test_jacobi_violation_has_witness():
    table = dict(SL2_TABLE)
    table[("xX", "xY")] = {"xH": 1, "xX": 1}
    with pytest.raises(JacobiViolation) as info:
        make_algebra(("xH", "xX", "xY"), table, rank=1)
    i, j, k = info.value.triple
    # oracle: the Jacobiator of the witness computed by direct vector brackets
    n = 3
    L_bad = type("Raw", (), {})()
    L_bad.n = n
    struct = {}
    for (a, b), coeffs in {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1, 1: 1}}.items():
        struct[(a, b)] = coeffs
        struct[(b, a)] = {kk: -c for kk, c in coeffs.items()}
    L_bad.bracket = lambda a, b: struct.get((a, b), {})
    e = [basis(n, t) for t in range(n)]
    jac = [
        sum(t)
        for t in zip(
            bracket_vec(L_bad, bracket_vec(L_bad, e[i], e[j]), e[k]),
            bracket_vec(L_bad, bracket_vec(L_bad, e[j], e[k]), e[i]),
            bracket_vec(L_bad, bracket_vec(L_bad, e[k], e[i]), e[j]),
        )
    ]
    assert any(jac)


def test_antisymmetry_violation():
    table = dict(SL2_TABLE)
    table[("xX", "xH")] = {"xX": 2}  # should be -2
    with pytest.raises(AntisymmetryViolation):
        make_algebra(("xH", "xX", "xY"), table, rank=1)
    with pytest.raises(AntisymmetryViolation):
        make_algebra(("xH", "xX", "xY"), {**SL2_TABLE, ("xH", "xH"): {"xX": 1}}, rank=1)


def test_killing_form_values(L, S3):
    assert killing_form(L) == [[8, 0, 0], [0, 0, 4], [0, 4, 0]]
    assert killing_form(S3) == [[-2, 0, 0], [0, -2, 0], [0, 0, -2]]


def test_killing_oracle_is_trace_of_ad(L3):
    # kappa(a, b) = tr(ad_a ad_b), computed with numpy from ad matrices
    n = L3.n
    ad = [np.array([[float(L3.struct(i, k, m)) for k in range(n)] for m in range(n)]) for i in range(n)]
    expected = [[np.trace(ad[i] @ ad[j]) for j in range(n)] for i in range(n)]
    assert np.allclose(np.array(killing_form(L3), dtype=float), expected)


@pytest.mark.parametrize("name", ["L", "S3", "L3"])
def test_builtin_invariants(name, request):
    A = request.getfixturevalue(name)
    kappa = killing_form(A)
    n = A.n
    assert all(kappa[i][j] == kappa[j][i] for i in range(n) for j in range(n))
    # ad-invariance of the Killing form on basis triples
    e = [basis(n, t) for t in range(n)]

    def kform(u, v):
        return sum(u[i] * kappa[i][j] * v[j] for i in range(n) for j in range(n))

    for a, b, c in product(range(n), repeat=3):
        assert kform(bracket_vec(A, e[a], e[b]), e[c]) + kform(e[b], bracket_vec(A, e[a], e[c])) == 0
    for p in A.invariants:
        assert p.is_homogeneous()
        assert all(not poisson_bracket(p, A.var(i), A) for i in range(n))


def test_quadratic_invariant_normalization(L, S3):
    xH, xX, xY = (L.var(i) for i in range(3))
    assert quadratic_invariant(L) == xX * xY + xH * xH * Fraction(1, 4)
    assert quadratic_invariant(S3) == sum((S3.var(i) ** 2 for i in range(3)), S3.var(0) * 0)


def test_sl3_structure_matches_matrix_commutators(L3):
    mats = [np.array(m, dtype=object) for m in sl3_matrices()]
    for i, j in product(range(8), repeat=2):
        comm = mats[i] @ mats[j] - mats[j] @ mats[i]
        rebuilt = sum((c * mats[k] for k, c in L3.bracket(i, j).items()), np.zeros((3, 3), dtype=object))
        assert (comm == rebuilt).all()
    assert (L3.rank, len(L3.invariants), [p.degree for p in L3.invariants]) == (2, 2, [2, 3])


def test_sl3_invariants_are_trace_powers(L3):
    # oracle: evaluate at a random point by building M(x) numerically
    mats = [np.array(m, dtype=float) for m in sl3_matrices()]
    gram = np.array([[np.trace(a @ b) for b in mats] for a in mats])
    dual = np.linalg.inv(gram) @ np.array([m.ravel() for m in mats])
    pt = [Fraction(k, 3) - 1 for k in (1, 5, 2, 7, 3, 4, 8, 6)]
    M = sum(float(x) * d for x, d in zip(pt, dual)).reshape(3, 3)
    p2, p3 = (float(p.evaluate(pt).constant()) for p in L3.invariants)
    assert np.isclose(p2, np.trace(M @ M))
    assert np.isclose(p3, np.trace(M @ M @ M))


@pytest.mark.parametrize(
    "point, regular, rank",
    [((1, 0, 0), True, 1), ((0, 0, 0), False, 0), ((0, 1, 0), True, 1)],
)
def test_regularity_examples(L, point, regular, rank):
    r = regularity_check(L, L.invariants, point)
    assert (r.regular, r.rank) == (regular, rank)


def test_gradient_values(L):
    p = L.invariants[0]
    assert [p.diff(i).evaluate((1, 0, 0)) for i in range(3)] == [Fraction(1, 2), 0, 0]
    assert [p.diff(i).evaluate((0, 1, 0)) for i in range(3)] == [0, 0, 1]


@pytest.mark.parametrize("name", ["L", "S3", "L3"])
def test_origin_is_singular(name, request):
    A = request.getfixturevalue(name)
    assert not regularity_check(A, A.invariants, [0] * A.n).regular

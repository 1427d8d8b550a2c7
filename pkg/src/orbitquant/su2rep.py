"""Finite-dimensional sl(2) representations at a specialized value of h.

Matrices are numpy object arrays of Fractions.  The lowest-weight model keeps
every entry rational:

    H v_k = hbar (m - 2k) v_k,  X v_k = hbar (m - k + 1) v_{k-1},  Y v_k = hbar (k + 1) v_{k+1}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .lie import sl2
from .orbit import QuantizedOrbitAlgebra
from .poly import Orbit
from .scalars import HPoly, specialize, to_rational
from .uh import UhElement, symmetrize

__all__ = [
    "MatrixRep",
    "RelationViolation",
    "AlgebraMismatch",
    "NotScalar",
    "build_irrep",
    "evaluate",
    "casimir_eigenvalue",
    "casimir_eigenvalue_check",
    "expected_casimir",
    "fuzzy_sphere_shift",
    "fuzzy_sphere_algebra",
    "kernel_and_span_check",
    "RepCheckReport",
]


class RelationViolation(RuntimeError):
    pass


class AlgebraMismatch(ValueError):
    pass


class NotScalar(RuntimeError):
    pass


def _zeros(d):
    return np.full((d, d), Fraction(0), dtype=object)


def _eye(d):
    out = _zeros(d)
    for i in range(d):
        out[i, i] = Fraction(1)
    return out


@dataclass(frozen=True, eq=False)
class MatrixRep:
    m: int
    hbar: Fraction
    H: np.ndarray
    X: np.ndarray
    Y: np.ndarray

    @property
    def dim(self) -> int:
        return self.m + 1

    @property
    def matrices(self):
        return (self.H, self.X, self.Y)


def _relations_hold(H, X, Y, hbar):
    comm = lambda a, b: a @ b - b @ a  # noqa: E731
    return (
        (comm(H, X) == 2 * hbar * X).all()
        and (comm(H, Y) == -2 * hbar * Y).all()
        and (comm(X, Y) == hbar * H).all()
    )


def build_irrep(m: int, hbar) -> MatrixRep:
    """Irreducible representation of dimension m + 1 with [X, Y] = hbar H."""
    hbar = to_rational(hbar)
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    if hbar == 0:
        raise ValueError("hbar must be nonzero")
    d = m + 1
    H, X, Y = _zeros(d), _zeros(d), _zeros(d)
    for k in range(d):
        H[k, k] = hbar * (m - 2 * k)
        if k >= 1:
            X[k - 1, k] = hbar * (m - k + 1)
        if k + 1 < d:
            Y[k + 1, k] = hbar * (k + 1)
    if not _relations_hold(H, X, Y, hbar):
        raise RelationViolation(f"sl2 relations fail for m={m}, hbar={hbar}")
    return MatrixRep(m, hbar, H, X, Y)


def evaluate(A: UhElement, rep: MatrixRep) -> np.ndarray:
    """Image of ``A`` with h set to ``rep.hbar``; words become matrix products."""
    if A.algebra != sl2():
        raise AlgebraMismatch("matrix representations are only defined for the built-in sl2")
    mats = rep.matrices
    out = _zeros(rep.dim)
    powers = {}
    for w, c in A.terms.items():
        coeff = c(rep.hbar)
        if not coeff:
            continue
        prod = powers.get(w)
        if prod is None:
            prod = _eye(rep.dim)
            for i in w:
                prod = prod @ mats[i]
            powers[w] = prod
        out = out + coeff * prod
    return out


def expected_casimir(m: int, hbar) -> Fraction:
    """``l (l + hbar)`` with ``l = hbar m / 2``."""
    hbar = to_rational(hbar)
    l = hbar * m / 2
    return l * (l + hbar)


def fuzzy_sphere_shift(m: int, hbar) -> HPoly:
    """``C(h) = l^2 + l h``, which specializes to l (l + hbar) at h = hbar."""
    l = to_rational(hbar) * m / 2
    return HPoly((l * l, l))


def casimir_eigenvalue(rep: MatrixRep) -> Fraction:
    """Scalar by which the Casimir acts; raises NotScalar otherwise."""
    L = sl2()
    P = symmetrize(L.invariants[0], L)
    M = evaluate(P, rep)
    c = M[0, 0]
    if not (M == c * _eye(rep.dim)).all():
        raise NotScalar("Casimir image is not a multiple of the identity")
    return c


def casimir_eigenvalue_check(rep: MatrixRep) -> Fraction:
    """Casimir eigenvalue, asserted equal to ``l (l + hbar)``."""
    c = casimir_eigenvalue(rep)
    expected = specialize(fuzzy_sphere_shift(rep.m, rep.hbar), rep.hbar)
    if c != expected:
        raise NotScalar(f"Casimir acts by {c}, expected {expected}")
    return c


def fuzzy_sphere_algebra(m: int, hbar, shift=None) -> QuantizedOrbitAlgebra:
    """U_h/I_h on the orbit p = l^2, shift defaulting to l^2 + l h."""
    L = sl2()
    l = to_rational(hbar) * m / 2
    orbit = Orbit(L, [l * l])
    return QuantizedOrbitAlgebra(orbit, [fuzzy_sphere_shift(m, hbar) if shift is None else shift])


@dataclass
class RepCheckReport:
    m: int
    hbar: Fraction
    expected: Fraction
    computed: Fraction
    kernel: bool
    spans: list = field(default_factory=list)  # (degree, rank, target)

    @property
    def span_ok(self) -> bool:
        return all(r == t for _, r, t in self.spans)

    @property
    def passed(self) -> bool:
        return self.kernel and self.span_ok and self.expected == self.computed


def kernel_and_span_check(Q: QuantizedOrbitAlgebra, rep: MatrixRep, d: int) -> RepCheckReport:
    """I_h maps to zero, and canonical words of degree <= d span min((m+1)^2, count)."""
    kernel = all(not any(evaluate(g, rep).ravel()) for g in Q.generators)
    words = []
    images = []
    spans = []
    for deg in range(d + 1):
        for w in Q.canonical_words(deg):
            words.append(w)
            images.append(list(evaluate(UhElement._raw(Q.algebra, {w: HPoly.const(1)}), rep).ravel()))
        r = linalg.rank(images)
        spans.append((deg, r, min(rep.dim**2, len(words))))
    return RepCheckReport(
        rep.m, rep.hbar, expected_casimir(rep.m, rep.hbar), casimir_eigenvalue(rep), kernel, spans
    )

"""Star products transported from U_h, plus the deformation checks around them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .poly import DimensionMismatch, Poly, classical_reduce, monomials, poisson_bracket
from .scalars import HPoly
from .uh import psi_pbw, psi_pbw_inv, symmetrize, symmetrize_inv, uh_mul

__all__ = [
    "Ordering",
    "StarProduct",
    "CochainValue",
    "Witness",
    "star",
    "extract_cochain",
    "check_axiom_a",
    "check_axiom_b",
    "check_associativity",
    "gauge_transform",
    "intertwine_check",
    "orbit_closure_witness",
]


class Ordering(str, Enum):
    PBW = "pbw"
    SYM = "sym"


@dataclass(frozen=True)
class StarProduct:
    algebra: object
    ordering: Ordering = Ordering.SYM

    def __post_init__(self):
        object.__setattr__(self, "ordering", Ordering(self.ordering))

    def quantize(self, f: Poly):
        if f.n != self.algebra.n:
            raise DimensionMismatch(f"{f.n} variables for an algebra of dimension {self.algebra.n}")
        if self.ordering is Ordering.PBW:
            return psi_pbw(f, self.algebra)
        return symmetrize(f, self.algebra)

    def dequantize(self, A) -> Poly:
        if self.ordering is Ordering.PBW:
            return psi_pbw_inv(A)
        return symmetrize_inv(A)

    def __call__(self, a, b):
        return star(a, b, self)


@dataclass(frozen=True)
class CochainValue:
    order: int
    value: Poly


def star(a: Poly, b: Poly, sp: StarProduct) -> Poly:
    """``psi^-1(psi(a) psi(b))``; h-carrying inputs are handled Q[h]-linearly."""
    return sp.dequantize(uh_mul(sp.quantize(a), sp.quantize(b)))


def extract_cochain(sp, n: int, a: Poly, b: Poly) -> CochainValue:
    return CochainValue(n, star(a, b, sp).h_coeff(n))


def check_axiom_a(sp, a, b) -> bool:
    """a * b agrees with the commutative product modulo h."""
    return not (star(a, b, sp) - a * b).truncate_h(1)


def check_axiom_b(sp, a, b, L=None) -> bool:
    """The star commutator equals h {a, b} modulo h^2."""
    L = sp.algebra if L is None else L
    comm = star(a, b, sp) - star(b, a, sp)
    return not (comm - poisson_bracket(a, b, L) * HPoly.h()).truncate_h(2)


def check_associativity(sp, a, b, c) -> bool:
    return star(star(a, b, sp), c, sp) == star(a, star(b, c, sp), sp)


def gauge_transform(source: StarProduct, target: StarProduct, f: Poly) -> Poly:
    """``T(f) = psi_target^-1(psi_source(f))``, intertwining source and target products."""
    if source.algebra != target.algebra:
        raise ValueError("gauge transform between different algebras")
    return target.dequantize(source.quantize(f))


def intertwine_check(source, target, a, b) -> bool:
    T = lambda f: gauge_transform(source, target, f)  # noqa: E731
    return T(star(a, b, source)) == star(T(a), T(b), target)


@dataclass(frozen=True)
class Witness:
    a: Poly
    index: int
    remainder: Poly


def orbit_closure_witness(sp, orbit, max_deg: int):
    """First monomial ``a`` (by degree, then descending order) with
    ``a * (p_i - c_i)`` not in I_0, or None.

    By linearity a failure on any polynomial shows up on some monomial.
    """
    n = sp.algebra.n
    for d in range(max_deg + 1):
        for exp in monomials(n, d):
            a = Poly.monomial(exp)
            for i, g in enumerate(orbit.generators):
                r = classical_reduce(star(a, g, sp), orbit)
                if r:
                    return Witness(a, i, r)
    return None

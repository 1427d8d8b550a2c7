"""Quantized orbit algebras U_h / I_h with I_h generated by P_i - C_i(h).

``P_i = Sym(p_i)`` are the Casimir operators.  Reduction modulo I_h uses
rules keyed by the degree-lex leading word of each generator; with several
Casimirs the rule set is completed by left S-pairs up to a degree bound.
Canonical words then correspond, exponent by exponent, to the canonical
monomials of the classical orbit algebra, which is the section used for the
quotient star product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .poly import (
    Orbit,
    Poly,
    _add_exp,
    _divides,
    _sub_exp,
    classical_reduce,
    monomial_key,
    monomials,
    poisson_bracket,
)
from .scalars import HPoly
from .uh import UhElement, _exponent, _word_of, centrality_check, psi_pbw, psi_pbw_inv, symmetrize, uh_mul

__all__ = [
    "NotCentral",
    "ReductionBoundExceeded",
    "CasimirShift",
    "QuantizedOrbitAlgebra",
    "casimir_operator",
    "ideal_reduce",
    "quotient_star",
    "hilbert_check",
    "quotient_axiom_check",
    "QuotientAxiomReport",
]


class NotCentral(ValueError):
    pass


class ReductionBoundExceeded(RuntimeError):
    pass


def casimir_operator(p: Poly, L) -> UhElement:
    """``Sym(p)``; raises NotCentral if ``p`` was not an invariant."""
    P = symmetrize(p, L)
    if not centrality_check(P, L):
        raise NotCentral(f"Sym({p.to_str(L.names)}) is not central")
    return P


@dataclass(frozen=True)
class CasimirShift:
    values: tuple

    def __init__(self, values, constants=None):
        vals = tuple(HPoly.coerce(v) for v in values)
        if constants is not None:
            if len(constants) != len(vals):
                raise ValueError(f"{len(vals)} shifts for {len(constants)} invariants")
            for v, c in zip(vals, constants):
                if v.constant() != c:
                    raise ValueError(f"shift {v} does not reduce to {c} at h = 0")
        object.__setattr__(self, "values", vals)


def _leading(A: UhElement):
    n = A.algebra.n
    w = max(A.terms, key=lambda u: monomial_key(_exponent(n, u)))
    return _exponent(n, w), A.terms[w]


def _monic(A: UhElement) -> UhElement:
    _, c = _leading(A)
    if not c.is_constant():
        raise ReductionBoundExceeded("leading coefficient depends on h; the quotient is not free here")
    return A * (1 / c.constant())


def _left_reduce(A, rules, largest_first=True, side="left"):
    L = A.algebra
    n = L.n
    leads = [(_leading(g)[0], g) for g in rules]
    terms = dict(A.terms)
    while True:
        reducible = [w for w in terms if any(_divides(lead, _exponent(n, w)) for lead, _ in leads)]
        if not reducible:
            return UhElement._raw(L, terms)
        pick = max if largest_first else min
        w = pick(reducible, key=lambda u: monomial_key(_exponent(n, u)))
        exp = _exponent(n, w)
        lead, g = next((lead, g) for lead, g in leads if _divides(lead, exp))
        mult = UhElement._raw(L, {_word_of(_sub_exp(exp, lead)): HPoly.const(1)})
        prod = uh_mul(mult, g) if side == "left" else uh_mul(g, mult)
        c = terms[w]
        for u, d in prod.terms.items():
            s = terms.get(u, HPoly()) - c * d
            if s:
                terms[u] = s
            else:
                terms.pop(u, None)


def _complete(generators, degree_bound):
    rules = [_monic(g) for g in generators if g]
    pairs = list(combinations(range(len(rules)), 2))
    while pairs:
        i, j = pairs.pop(0)
        ei, ej = _leading(rules[i])[0], _leading(rules[j])[0]
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        if sum(lcm) > degree_bound:
            raise ReductionBoundExceeded(f"S-pair of degree {sum(lcm)} exceeds bound {degree_bound}")
        L = rules[i].algebra
        mi = UhElement._raw(L, {_word_of(_sub_exp(lcm, ei)): HPoly.const(1)})
        mj = UhElement._raw(L, {_word_of(_sub_exp(lcm, ej)): HPoly.const(1)})
        r = _left_reduce(uh_mul(mi, rules[i]) - uh_mul(mj, rules[j]), rules)
        if r:
            if r.degree > degree_bound:
                raise ReductionBoundExceeded(f"rule of degree {r.degree} exceeds bound {degree_bound}")
            rules.append(_monic(r))
            pairs.extend((k, len(rules) - 1) for k in range(len(rules) - 1))
    rules.sort(key=lambda g: monomial_key(_leading(g)[0]))
    kept = []
    for g in rules:
        if not any(_divides(_leading(k)[0], _leading(g)[0]) for k in kept):
            kept.append(g)
    return kept


class QuantizedOrbitAlgebra:
    """U_h modulo the ideal generated by ``P_i - C_i(h)``.

    ``shifts`` default to the constant shifts ``C_i(h) = c_i``.
    """

    def __init__(self, orbit: Orbit, shifts=None, degree_bound=8):
        L = orbit.algebra
        self.orbit = orbit
        self.algebra = L
        if shifts is None:
            shifts = orbit.constants
        if not isinstance(shifts, CasimirShift):
            shifts = CasimirShift(shifts, orbit.constants)
        else:
            CasimirShift(shifts.values, orbit.constants)
        self.shifts = shifts
        self.casimirs = tuple(casimir_operator(p, L) for p in orbit.invariants)
        self.generators = tuple(P - C for P, C in zip(self.casimirs, shifts.values))
        self.degree_bound = degree_bound
        self.rules = tuple(_complete(self.generators, degree_bound))
        self.leading_exponents = tuple(_leading(g)[0] for g in self.rules)

    def is_canonical(self, exp) -> bool:
        return not any(_divides(lead, exp) for lead in self.leading_exponents)

    def canonical_words(self, degree: int):
        return [_word_of(e) for e in monomials(self.algebra.n, degree) if self.is_canonical(e)]

    def rule_strings(self):
        """Rules as ``lhs -> rhs`` with the leading word eliminated."""
        out = []
        for g in self.rules:
            exp, _ = _leading(g)
            w = _word_of(exp)
            lhs = UhElement._raw(self.algebra, {w: HPoly.const(1)})
            rhs = lhs - g
            out.append(f"{lhs.to_str()} -> {rhs.to_str()}")
        return out

    def __repr__(self):
        return f"QuantizedOrbitAlgebra({self.orbit!r}, shifts={[str(v) for v in self.shifts.values]})"


def ideal_reduce(A: UhElement, Q: QuantizedOrbitAlgebra, strategy="largest", side="left") -> UhElement:
    """Canonical representative of ``A`` modulo I_h.

    ``strategy`` picks the largest or smallest reducible word first and
    ``side`` multiplies rules on the left or right; the result is the same.
    """
    if strategy not in ("largest", "smallest") or side not in ("left", "right"):
        raise ValueError(f"bad reduction strategy {strategy!r}/{side!r}")
    return _left_reduce(A, Q.rules, strategy == "largest", side)


def _section(a: Poly, Q) -> UhElement:
    a = classical_reduce(a, Q.orbit)
    return psi_pbw(a, Q.algebra)


def quotient_star(a: Poly, b: Poly, Q: QuantizedOrbitAlgebra) -> Poly:
    """Star product on Pol(orbit) read through the exponent-pattern section."""
    prod = ideal_reduce(uh_mul(_section(a, Q), _section(b, Q)), Q)
    return classical_reduce(psi_pbw_inv(prod), Q.orbit)


def hilbert_check(Q: QuantizedOrbitAlgebra, d_max: int):
    """``[(d, quotient_dim, classical_dim)]`` with cumulative counts up to degree d."""
    n = Q.algebra.n
    rows = []
    qd = cd = 0
    for d in range(d_max + 1):
        mons = monomials(n, d)
        qd += sum(1 for e in mons if Q.is_canonical(e))
        cd += sum(1 for e in mons if Q.orbit.is_canonical(e))
        rows.append((d, qd, cd))
    return rows


@dataclass
class QuotientAxiomReport:
    d_max: int
    pairs: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def canonical_monomials_upto(Q, d_max):
    return [Poly.monomial(e) for d in range(d_max + 1) for e in monomials(Q.algebra.n, d) if Q.orbit.is_canonical(e)]


def quotient_axiom_check(Q: QuantizedOrbitAlgebra, d_max: int) -> QuotientAxiomReport:
    """Deformation properties a and b for all canonical monomial pairs up to ``d_max``."""
    report = QuotientAxiomReport(d_max)
    L = Q.algebra
    mons = canonical_monomials_upto(Q, d_max)
    h = HPoly.h()
    for a in mons:
        for b in mons:
            report.pairs += 1
            ab = quotient_star(a, b, Q)
            ba = quotient_star(b, a, Q)
            diff_a = (ab - classical_reduce(a * b, Q.orbit)).truncate_h(1)
            if diff_a:
                report.failures.append(("a", a, b, diff_a))
            diff_b = (ab - ba - classical_reduce(poisson_bracket(a, b, L), Q.orbit) * h).truncate_h(2)
            if diff_b:
                report.failures.append(("b", a, b, diff_b))
    return report

"""Commutative polynomials on the dual of a Lie algebra, with coefficients in Q[h].

Also holds the linear Poisson bracket and the classical orbit ideal generated
by ``p_i - c_i``, with normal forms computed by a bounded Buchberger completion.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from .scalars import HPoly, format_rational, to_rational

__all__ = [
    "Poly",
    "DimensionMismatch",
    "GroebnerIncomplete",
    "OrbitError",
    "Orbit",
    "monomial_key",
    "monomials",
    "poisson_bracket",
    "classical_reduce",
    "in_orbit_ideal",
    "groebner_basis",
    "sample_orbit",
    "reduce_by",
]


class DimensionMismatch(ValueError):
    pass


class GroebnerIncomplete(RuntimeError):
    """Completion of the orbit ideal exceeded the configured degree bound."""


class OrbitError(ValueError):
    pass


def monomial_key(exp):
    """Degree-lexicographic sort key; the first variable is heaviest."""
    return (sum(exp), exp)


def monomials(n: int, degree: int):
    """All exponent vectors of total degree ``degree``, in descending monomial order."""
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    out.sort(key=monomial_key, reverse=True)
    return out


def _unit(n, k):
    return tuple(int(i == k) for i in range(n))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Element of Pol(g*)[h]: a map from exponent vectors to nonzero HPoly."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {n} variables")
            c = HPoly.coerce(c)
            if c:
                clean[exp] = clean.get(exp, HPoly()) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors --
    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def const(cls, n, c=1):
        return cls(n, {(0,) * n: c})

    one = const

    @classmethod
    def var(cls, n, i):
        exp = [0] * n
        exp[i] = 1
        return cls._raw(n, {tuple(exp): HPoly.const(1)})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    # -- queries --
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree in the coordinates; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def h_degree(self) -> int:
        return max((c.degree for c in self.terms.values()), default=-1)

    def is_h_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exp) -> HPoly:
        return self.terms.get(tuple(exp), HPoly())

    def items(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def leading(self):
        """``(exponent, coefficient)`` of the largest monomial."""
        exp = max(self.terms, key=monomial_key)
        return exp, self.terms[exp]

    def h_coeff(self, k: int) -> "Poly":
        """The classical polynomial multiplying h^k."""
        out = {}
        for exp, c in self.terms.items():
            q = c.coeff(k)
            if q:
                out[exp] = HPoly._raw((q,))
        return Poly._raw(self.n, out)

    def truncate_h(self, order: int) -> "Poly":
        """Reduce modulo h^order."""
        out = {}
        for exp, c in self.terms.items():
            c = c.truncate(order)
            if c:
                out[exp] = c
        return Poly._raw(self.n, out)

    def specialize_h(self, hbar) -> "Poly":
        out = {}
        for exp, c in self.terms.items():
            q = c(hbar)
            if q:
                out[exp] = HPoly._raw((q,))
        return Poly._raw(self.n, out)

    def evaluate(self, point) -> HPoly:
        point = [to_rational(x) for x in point]
        if len(point) != self.n:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.n}")
        acc = HPoly()
        for exp, c in self.terms.items():
            v = Fraction(1)
            for x, e in zip(point, exp):
                if e:
                    v *= x**e
            acc = acc + c * v
        return acc

    def diff(self, i: int) -> "Poly":
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                new = exp[:i] + (e - 1,) + exp[i + 1:]
                out[new] = c * e
        return Poly._raw(self.n, out)

    # -- arithmetic --
    def _check(self, other):
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {other.n} variables")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.n, HPoly.coerce(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp)
            s = c if s is None else s + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = HPoly.coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly.zero(self.n)
            return Poly._raw(self.n, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        try:
            return self == Poly.const(self.n, HPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # -- text --
    def to_str(self, names=None) -> str:
        """Flat textual form, e.g. ``xX*xY + 1/2*h*xH``; parseable back."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.n)]
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            for k, q in c.terms():
                factors = []
                if abs(q) != 1 or (not mono and k == 0):
                    factors.append(format_rational(abs(q)))
                if k:
                    factors.append("h" if k == 1 else f"h^{k}")
                if mono:
                    factors.append(mono)
                parts.append((q < 0, "*".join(factors)))
        if not parts:
            return "0"
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r})"


def poisson_bracket(f: Poly, g: Poly, L) -> Poly:
    """Linear Poisson bracket ``sum c_ij^k x_k df/dx_i dg/dx_j``."""
    if f.n != L.n or g.n != L.n:
        raise DimensionMismatch(f"bracket on {L.n} coordinates given {f.n} and {g.n}")
    df = [f.diff(i) for i in range(L.n)]
    dg = [g.diff(j) for j in range(L.n)]
    out = Poly.zero(L.n)
    for (i, j), coeffs in L.structure.items():
        if not df[i] or not dg[j]:
            continue
        lin = Poly._raw(L.n, {_unit(L.n, k): HPoly._raw((c,)) for k, c in coeffs.items()})
        out = out + lin * df[i] * dg[j]
    return out


# -- Groebner machinery for the classical orbit ideal --


def reduce_by(f: Poly, basis) -> Poly:
    """Full normal form of ``f`` modulo ``basis`` (leading coefficients must be rational)."""
    leads = []
    for g in basis:
        exp, c = g.leading()
        if not c.is_constant():
            raise GroebnerIncomplete("leading coefficient depends on h")
        leads.append((exp, c.constant(), g))
    rem = dict(f.terms)
    done = {}
    while rem:
        exp = max(rem, key=monomial_key)
        c = rem[exp]
        for lexp, lc, g in leads:
            if _divides(lexp, exp):
                shift = _sub_exp(exp, lexp)
                factor = c * (1 / lc)
                for ge, gc in g.terms.items():
                    e = _add_exp(ge, shift)
                    s = rem.get(e, HPoly()) - gc * factor
                    if s:
                        rem[e] = s
                    else:
                        rem.pop(e, None)
                break
        else:
            done[exp] = rem.pop(exp)
    return Poly._raw(f.n, done)


def _monic(g: Poly) -> Poly:
    _, c = g.leading()
    return g * (1 / c.constant())


def groebner_basis(generators, degree_bound: int = 8):
    """Reduced Groebner basis under degree-lex; raises GroebnerIncomplete past the bound."""
    basis = [_monic(g) for g in generators if g]
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        ei, ej = basis[i].leading()[0], basis[j].leading()[0]
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        if lcm == _add_exp(ei, ej):
            continue  # coprime leading monomials
        if sum(lcm) > degree_bound:
            raise GroebnerIncomplete(f"S-pair of degree {sum(lcm)} exceeds bound {degree_bound}")
        s = basis[i] * Poly.monomial(_sub_exp(lcm, ei)) - basis[j] * Poly.monomial(_sub_exp(lcm, ej))
        r = reduce_by(s, basis)
        if r:
            if r.degree > degree_bound:
                raise GroebnerIncomplete(f"basis element of degree {r.degree} exceeds bound {degree_bound}")
            basis.append(_monic(r))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    basis.sort(key=lambda g: monomial_key(g.leading()[0]))
    kept = []
    for g in basis:
        if not any(_divides(k.leading()[0], g.leading()[0]) for k in kept):
            kept.append(g)
    basis = kept
    out = []
    for k, g in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        lexp, lc = g.leading()
        tail = Poly._raw(g.n, {e: c for e, c in g.terms.items() if e != lexp})
        out.append(Poly.monomial(lexp, lc) + reduce_by(tail, others) if others else g)
    out.sort(key=lambda g: monomial_key(g.leading()[0]))
    return out


class Orbit:
    """A regular coadjoint orbit ``p_i(x) = c_i`` with its classical ideal I_0.

    ``point`` must lie on the orbit and be regular; when omitted a small
    integer search is attempted.  ``partial=True`` allows fewer invariants
    than the rank (truncated orbit ideals used for desk-scale checks).
    """

    def __init__(self, algebra, constants, invariants=None, point=None, partial=False, degree_bound=8):
        from .lie import regularity_check

        self.algebra = algebra
        self.invariants = tuple(algebra.invariants if invariants is None else invariants)
        self.constants = tuple(to_rational(c) for c in constants)
        if len(self.constants) != len(self.invariants):
            raise OrbitError(f"{len(self.invariants)} invariants but {len(self.constants)} constants")
        if not partial and len(self.invariants) != algebra.rank:
            raise OrbitError(f"rank {algebra.rank} needs {algebra.rank} invariants, got {len(self.invariants)}")
        for p in self.invariants:
            if p.n != algebra.n or not p.is_homogeneous() or not p.is_h_free() or p.degree < 1:
                raise OrbitError(f"invariant {p} is not a homogeneous classical polynomial")
        self.degree_bound = degree_bound
        self.generators = tuple(p - c for p, c in zip(self.invariants, self.constants))
        if point is None:
            point = _find_point(algebra, self.invariants, self.constants)
            if point is None:
                raise OrbitError("no regular rational point found on the orbit; pass point=")
        point = tuple(to_rational(x) for x in point)
        for p, c in zip(self.invariants, self.constants):
            if p.evaluate(point) != c:
                raise OrbitError(f"point {point} does not satisfy {p} = {c}")
        status = regularity_check(algebra, self.invariants, point)
        if not status.regular:
            raise OrbitError(f"point {point} is singular (Jacobian rank {status.rank})")
        self.point = point
        self.basis = tuple(groebner_basis(self.generators, degree_bound))

    @property
    def leading_exponents(self):
        return [g.leading()[0] for g in self.basis]

    def is_canonical(self, exp) -> bool:
        return not any(_divides(lead, exp) for lead in self.leading_exponents)

    def canonical_monomials(self, degree: int):
        """Monomials of exactly this degree that are not reducible by I_0."""
        return [e for e in monomials(self.algebra.n, degree) if self.is_canonical(e)]

    def __repr__(self):
        cs = ", ".join(format_rational(c) for c in self.constants)
        return f"Orbit({self.algebra.label}, constants=({cs}))"


def _find_point(algebra, invariants, constants):
    n = algebra.n
    if algebra.label == "sl2" and len(invariants) == 1 and invariants[0] == algebra.invariants[0]:
        # xX*xY + 1/4*xH^2 = c  at  (0, c, 1)
        candidates = [(0, constants[0], 1)]
    else:
        candidates = []
        values = [1, -1, 2, -2]
        for support in range(1, min(n, 3) + 1):
            for idx in combinations(range(n), support):
                for vals in product(values, repeat=support):
                    pt = [0] * n
                    for i, v in zip(idx, vals):
                        pt[i] = v
                    candidates.append(tuple(pt))
    from .lie import regularity_check

    for pt in candidates:
        if all(p.evaluate(pt) == c for p, c in zip(invariants, constants)):
            if regularity_check(algebra, invariants, pt).regular:
                return pt
    return None


def sample_orbit(algebra, invariants=None, partial=False, degree_bound=8) -> Orbit:
    """Orbit through the first regular small-integer point found (deterministic)."""
    from .lie import regularity_check

    invariants = tuple(algebra.invariants if invariants is None else invariants)
    n = algebra.n
    for support in range(1, min(n, 3) + 1):
        for idx in combinations(range(n), support):
            for vals in product([1, -1, 2, -2], repeat=support):
                pt = [0] * n
                for i, v in zip(idx, vals):
                    pt[i] = v
                if regularity_check(algebra, invariants, pt).regular:
                    constants = [p.evaluate(pt).constant() for p in invariants]
                    return Orbit(algebra, constants, invariants, pt, partial, degree_bound)
    raise OrbitError("no regular small-integer point found")


def classical_reduce(f: Poly, orbit: Orbit) -> Poly:
    """Normal form of ``f`` modulo I_0; h-dependence of coefficients passes through."""
    if f.n != orbit.algebra.n:
        raise DimensionMismatch(f"{f.n} variables on an orbit in {orbit.algebra.n}-dimensional dual")
    return reduce_by(f, orbit.basis)


def in_orbit_ideal(f: Poly, orbit: Orbit) -> bool:
    return not classical_reduce(f, orbit)

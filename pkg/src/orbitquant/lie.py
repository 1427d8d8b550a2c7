"""Lie algebras given by exact structure constants.

A :class:`LieAlgebra` is validated at construction: antisymmetry, the Jacobi
identity and nondegeneracy of the Killing form are all checked exhaustively.
Built-in algebras: :func:`sl2`, :func:`so3`, :func:`sl3`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg
from .poly import Poly
from .scalars import to_rational

__all__ = [
    "LieAlgebra",
    "LieAlgebraError",
    "JacobiViolation",
    "AntisymmetryViolation",
    "DegenerateKillingForm",
    "Regularity",
    "make_algebra",
    "killing_form",
    "quadratic_invariant",
    "regularity_check",
    "sl2",
    "so3",
    "sl3",
    "builtin",
    "BUILTINS",
]


class LieAlgebraError(ValueError):
    pass


class JacobiViolation(LieAlgebraError):
    def __init__(self, triple, names=None):
        self.triple = triple
        label = tuple(names[i] for i in triple) if names else triple
        super().__init__(f"Jacobi identity fails on {label}")


class AntisymmetryViolation(LieAlgebraError):
    pass


class DegenerateKillingForm(LieAlgebraError):
    pass


class LieAlgebra:
    """Basis ``X_1..X_n`` with ``[X_i, X_j] = sum_k c_ij^k X_k``.

    ``names`` label the dual coordinates (``xH``), ``generators`` the basis
    elements of the algebra itself (``H``).  ``structure`` maps ordered pairs
    ``(i, j)``, i != j, to sparse ``{k: c_ij^k}`` dicts.  Indices are 0-based.
    """

    def __init__(self, names, generators, structure, rank, invariants=(), label=None):
        self.n = len(names)
        self.names = tuple(names)
        self.generators = tuple(generators)
        self.structure = structure
        self.rank = rank
        self.invariants = tuple(invariants)
        self.label = label or "custom"

    def struct(self, i, j, k) -> Fraction:
        return self.structure.get((i, j), {}).get(k, Fraction(0))

    def bracket(self, i, j) -> dict:
        return self.structure.get((i, j), {})

    def index(self, name) -> int:
        """Position of a coordinate or generator name."""
        if name in self.names:
            return self.names.index(name)
        return self.generators.index(name)

    def var(self, i) -> Poly:
        if isinstance(i, str):
            i = self.index(i)
        return Poly.var(self.n, i)

    def _key(self):
        return (self.names, tuple(sorted((ij, tuple(sorted(v.items()))) for ij, v in self.structure.items())))

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"LieAlgebra({self.label}, n={self.n}, rank={self.rank})"


def _complete(n, table, names):
    def idx(x):
        if isinstance(x, str):
            if x not in names:
                raise LieAlgebraError(f"unknown basis element {x!r}")
            return names.index(x)
        if not 0 <= x < n:
            raise LieAlgebraError(f"basis index {x} out of range")
        return x

    structure = {}
    for (i, j), coeffs in table.items():
        i, j = idx(i), idx(j)
        coeffs = {idx(k): to_rational(c) for k, c in coeffs.items()}
        coeffs = {k: c for k, c in coeffs.items() if c}
        if i == j:
            if coeffs:
                raise AntisymmetryViolation(f"[{names[i]}, {names[i]}] must vanish")
            continue
        for a, b, sign in ((i, j, 1), (j, i, -1)):
            val = {k: sign * c for k, c in coeffs.items()}
            if (a, b) in structure and structure[(a, b)] != val:
                raise AntisymmetryViolation(f"[{names[i]}, {names[j]}] given inconsistently")
            structure[(a, b)] = val
    return {ij: v for ij, v in structure.items() if v}


def jacobi_witness(n, structure):
    """First ``(i, j, k)`` violating Jacobi, or None."""

    def c(i, j, k):
        return structure.get((i, j), {}).get(k, 0)

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for r in range(n):
                    s = sum(
                        c(i, j, m) * c(m, k, r) + c(j, k, m) * c(m, i, r) + c(k, i, m) * c(m, j, r)
                        for m in range(n)
                    )
                    if s:
                        return (i, j, k)
    return None


def _killing(n, structure):
    def c(i, j, k):
        return structure.get((i, j), {}).get(k, Fraction(0))

    return [
        [sum((c(i, k, m) * c(j, m, k) for k in range(n) for m in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def make_algebra(names, bracket_table, rank, invariants=None, generators=None, label=None, normalization=1):
    """Validated algebra from brackets ``{(i, j): {k: c}}`` (indices or names).

    ``invariants`` are Polys or callables ``L -> Poly``; if omitted, the
    normalized quadratic invariant is used (enough for rank 1).
    """
    names = tuple(names)
    n = len(names)
    if len(set(names)) != n:
        raise LieAlgebraError("duplicate coordinate names")
    if generators is None:
        generators = tuple(s[1:] if s.startswith("x") and len(s) > 1 else s.upper() for s in names)
    generators = tuple(generators)
    if len(generators) != n or len(set(generators)) != n:
        raise LieAlgebraError("generator names must be distinct, one per basis element")
    if "h" in names or "h" in generators:
        raise LieAlgebraError("'h' is reserved for the deformation parameter")
    structure = _complete(n, bracket_table, names)
    witness = jacobi_witness(n, structure)
    if witness is not None:
        raise JacobiViolation(witness, names)
    if linalg.rank(_killing(n, structure)) < n:
        raise DegenerateKillingForm("Killing form is degenerate; the algebra is not semisimple")
    rank = int(rank)
    if not 1 <= rank <= n:
        raise LieAlgebraError(f"rank {rank} out of range")
    L = LieAlgebra(names, generators, structure, rank, (), label)
    L.normalization = to_rational(normalization)
    if invariants is None:
        invs = [quadratic_invariant(L)]
    else:
        invs = [p(L) if callable(p) else p for p in invariants]
    L.invariants = tuple(invs)
    return L


def killing_form(L):
    """``kappa_ij = sum_{k,m} c_ik^m c_jm^k`` as a list of rows."""
    return _killing(L.n, L.structure)


def quadratic_invariant(L) -> Poly:
    """``sum kappa^{ij} x_i x_j`` (inverse Killing form) times the algebra's normalization."""
    try:
        inv = linalg.inverse(killing_form(L))
    except ZeroDivisionError:
        raise DegenerateKillingForm("Killing form is degenerate") from None
    scale = getattr(L, "normalization", Fraction(1))
    out = Poly.zero(L.n)
    for i in range(L.n):
        for j in range(L.n):
            if inv[i][j]:
                out = out + L.var(i) * L.var(j) * (inv[i][j] * scale)
    return out


@dataclass(frozen=True)
class Regularity:
    regular: bool
    rank: int

    def __str__(self):
        return "regular" if self.regular else f"singular({self.rank})"


def regularity_check(L, invariants, point) -> Regularity:
    """Rank of the Jacobian of the invariants at ``point``; regular iff it equals their count."""
    point = [to_rational(x) for x in point]
    jac = [[p.diff(i).evaluate(point).constant() for i in range(L.n)] for p in invariants]
    r = linalg.rank(jac)
    return Regularity(r == len(invariants), r)


# -- built-ins --


@lru_cache(maxsize=None)
def sl2() -> LieAlgebra:
    """sl(2) in the basis (H, X, Y): [H,X]=2X, [H,Y]=-2Y, [X,Y]=H."""
    table = {
        ("xH", "xX"): {"xX": 2},
        ("xH", "xY"): {"xY": -2},
        ("xX", "xY"): {"xH": 1},
    }
    return make_algebra(("xH", "xX", "xY"), table, rank=1, label="sl2", normalization=2)


@lru_cache(maxsize=None)
def so3() -> LieAlgebra:
    """so(3): [e1,e2]=e3 and cyclic."""
    table = {("x1", "x2"): {"x3": 1}, ("x2", "x3"): {"x1": 1}, ("x3", "x1"): {"x2": 1}}
    return make_algebra(("x1", "x2", "x3"), table, rank=1, generators=("e1", "e2", "e3"),
                        label="so3", normalization=-2)


def _elementary(i, j):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[i][j] = Fraction(1)
    return m


def _mat_add(a, b, s=1):
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), a[0][0] * 0) for j in range(len(b[0]))]
            for i in range(len(a))]


def _trace(a):
    return sum((a[i][i] for i in range(1, len(a))), a[0][0])


SL3_NAMES = ("xh1", "xh2", "xe1", "xe2", "xe3", "xf1", "xf2", "xf3")


def sl3_matrices():
    """Defining representation of the sl3 basis, in the order of ``SL3_NAMES``."""
    e = _elementary
    return [
        _mat_add(e(0, 0), e(1, 1), -1),
        _mat_add(e(1, 1), e(2, 2), -1),
        e(0, 1), e(1, 2), e(0, 2),
        e(1, 0), e(2, 1), e(2, 0),
    ]


def _coordinates(mats, m):
    """Coordinates of matrix ``m`` in the basis ``mats``."""
    rows = [[b[i][j] for b in mats] + [m[i][j]] for i in range(3) for j in range(3)]
    red, pivots = linalg.row_echelon(rows)
    if len(mats) in pivots:
        raise LieAlgebraError("matrix outside the span of the basis")
    out = [Fraction(0)] * len(mats)
    for row, col in zip(red, pivots):
        out[col] = row[-1]
    return out


def _sl3_trace_powers(L):
    mats = sl3_matrices()
    gram = [[_trace(_mat_mul(a, b)) for b in mats] for a in mats]
    ginv = linalg.inverse(gram)
    # M(x) = sum_i x_i X^i, X^i the trace-dual basis, so that g ~ g* equivariantly
    zero = Poly.zero(L.n)
    M = [[zero] * 3 for _ in range(3)]
    for i in range(L.n):
        for j in range(L.n):
            if ginv[i][j]:
                M = [[M[r][s] + L.var(i) * (ginv[i][j] * mats[j][r][s]) for s in range(3)] for r in range(3)]
    M2 = _mat_mul(M, M)
    return _trace(M2), _trace(_mat_mul(M2, M))


@lru_cache(maxsize=None)
def sl3() -> LieAlgebra:
    """sl(3) from the commutators of its defining representation.

    Invariants are tr(M^2) and tr(M^3) of the trace-dual matrix of x.
    """
    mats = sl3_matrices()
    table = {}
    for i, j in product(range(8), repeat=2):
        if i < j:
            comm = _mat_add(_mat_mul(mats[i], mats[j]), _mat_mul(mats[j], mats[i]), -1)
            table[(i, j)] = {k: c for k, c in enumerate(_coordinates(mats, comm)) if c}
    # Killing = 6 tr on sl3, so normalization 6 makes the quadratic invariant tr(M^2)
    return make_algebra(
        SL3_NAMES, table, rank=2, label="sl3", normalization=6,
        invariants=[quadratic_invariant, lambda L: _sl3_trace_powers(L)[1]],
    )


BUILTINS = {"sl2": sl2, "so3": so3, "sl3": sl3}


def builtin(name: str) -> LieAlgebra:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise LieAlgebraError(f"unknown built-in algebra {name!r}; choose from {sorted(BUILTINS)}") from None

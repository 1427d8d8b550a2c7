"""The deformed enveloping algebra U_h = T(g)/(XY - YX - h[X,Y]).

Elements are kept in PBW normal form: linear combinations of nondecreasing
generator words with coefficients in Q[h].  Descending adjacent pairs
``X_j X_i`` (j > i) are rewritten to ``X_i X_j + h [X_j, X_i]``; the rewriting
terminates (word length, then inversion count, decreases) and is confluent,
so the normal form does not depend on the strategy.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, monomial_key
from .scalars import HPoly, format_rational

__all__ = [
    "UhElement",
    "pbw_normal_form",
    "uh_mul",
    "generator",
    "word",
    "psi_pbw",
    "psi_pbw_inv",
    "symmetrize",
    "symmetrize_inv",
    "centrality_check",
    "is_sorted",
    "STRATEGIES",
]

STRATEGIES = ("recursive", "leftmost", "rightmost")

_H = HPoly.h()


def is_sorted(w) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def _exponent(n, w):
    exp = [0] * n
    for i in w:
        exp[i] += 1
    return tuple(exp)


def _word_of(exp):
    return tuple(i for i, e in enumerate(exp) for _ in range(e))


def _accumulate(out, w, c):
    s = out.get(w)
    s = c if s is None else s + c
    if s:
        out[w] = s
    else:
        out.pop(w, None)


class _Kernel:
    """Memoized rewriting for one algebra.  Caches only store pure results."""

    def __init__(self, L):
        self.L = L
        self._left = {}
        self._words = {}
        self._sym = {}
        # h * [X_a, X_b] for a > b
        self._hbracket = {
            (a, b): [(k, _H * c) for k, c in L.bracket(a, b).items()]
            for a in range(L.n) for b in range(a)
        }

    def left_gen(self, a, w):
        """Normal form of ``X_a * w`` for a sorted word ``w``."""
        if not w or a <= w[0]:
            return {(a,) + w: HPoly.const(1)}
        key = (a, w)
        hit = self._left.get(key)
        if hit is not None:
            return hit
        b, rest = w[0], w[1:]
        out = self.left_elem(b, self.left_gen(a, rest))
        for k, c in self._hbracket[(a, b)]:
            for u, d in self.left_gen(k, rest).items():
                _accumulate(out, u, c * d)
        self._left[key] = out
        return out

    def left_elem(self, a, terms):
        out = {}
        for w, c in terms.items():
            for u, d in self.left_gen(a, w).items():
                _accumulate(out, u, c * d)
        return out

    def mul_words(self, u, v):
        key = (u, v)
        hit = self._words.get(key)
        if hit is not None:
            return hit
        out = {v: HPoly.const(1)}
        for a in reversed(u):
            out = self.left_elem(a, out)
        self._words[key] = out
        return out

    def normal_word(self, w):
        out = {(): HPoly.const(1)}
        for a in reversed(w):
            out = self.left_elem(a, out)
        return out

    def sym(self, exp):
        """Symmetrization of the monomial with exponent ``exp``, normalized.

        Grouping the k! orderings by their first letter gives
        Sym(m) = (1/k) sum_i e_i X_i Sym(m / x_i).
        """
        hit = self._sym.get(exp)
        if hit is not None:
            return hit
        k = sum(exp)
        if k <= 1:
            out = {_word_of(exp): HPoly.const(1)}
        else:
            out = {}
            for i, e in enumerate(exp):
                if e:
                    lower = exp[:i] + (e - 1,) + exp[i + 1:]
                    for w, c in self.left_elem(i, self.sym(lower)).items():
                        _accumulate(out, w, c * Fraction(e, k))
        self._sym[exp] = out
        return out


def _kernel(L) -> _Kernel:
    k = L.__dict__.get("_uh_kernel")
    if k is None:
        k = L.__dict__["_uh_kernel"] = _Kernel(L)
    return k


class UhElement:
    """Element of U_h in PBW normal form: ``{sorted word: HPoly}``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if not is_sorted(w):
                raise ValueError(f"word {w} is not in PBW order; use pbw_normal_form")
            _accumulate(self.terms, w, HPoly.coerce(c))

    @classmethod
    def _raw(cls, algebra, terms):
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, algebra):
        return cls._raw(algebra, {(): HPoly.const(1)})

    @classmethod
    def zero(cls, algebra):
        return cls._raw(algebra, {})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, w) -> HPoly:
        return self.terms.get(tuple(w), HPoly())

    def items(self):
        n = self.algebra.n
        return sorted(self.terms.items(), key=lambda t: monomial_key(_exponent(n, t[0])), reverse=True)

    def specialize_h(self, hbar):
        return {w: c(hbar) for w, c in self.terms.items()}

    def _check(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ValueError("elements of different enveloping algebras")

    def _coerce(self, other):
        if isinstance(other, UhElement):
            self._check(other)
            return other
        return UhElement._raw(self.algebra, {(): HPoly.coerce(other)} if other else {})

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return UhElement._raw(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return UhElement._raw(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, UhElement):
            return uh_mul(self, other)
        try:
            c = HPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not c:
            return UhElement.zero(self.algebra)
        return UhElement._raw(self.algebra, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, UhElement):
            return uh_mul(other, self)
        return self.__mul__(other)

    def __pow__(self, k: int):
        out = UhElement.one(self.algebra)
        for _ in range(k):
            out = uh_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, UhElement):
            return self.algebra == other.algebra and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def to_str(self) -> str:
        """Flat text such as ``1/4*H^2 + X*Y - 1/2*h*H``."""
        names = self.algebra.generators
        parts = []
        for w, c in self.items():
            exp = _exponent(self.algebra.n, w)
            mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e)
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

    __str__ = to_str

    def __repr__(self):
        return f"UhElement({self.to_str()!r})"


def _rewrite(L, terms, leftmost: bool):
    """Explicit one-step rewriting until every word is sorted."""
    pending = {}
    for w, c in terms:
        _accumulate(pending, tuple(w), HPoly.coerce(c))
    done = {}
    while pending:
        w = max(pending, key=lambda u: (len(u), u))
        c = pending.pop(w)
        positions = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not positions:
            _accumulate(done, w, c)
            continue
        p = positions[0] if leftmost else positions[-1]
        j, i = w[p], w[p + 1]
        _accumulate(pending, w[:p] + (i, j) + w[p + 2:], c)
        for k, ck in L.bracket(j, i).items():
            _accumulate(pending, w[:p] + (k,) + w[p + 2:], c * _H * ck)
    return done


def pbw_normal_form(L, expr, strategy: str = "recursive") -> UhElement:
    """Normal form of a formal sum of (possibly unsorted) words.

    ``expr`` is a mapping or an iterable of ``(word, coefficient)`` pairs;
    a bare word (sequence of indices) is also accepted.
    """
    if isinstance(expr, dict):
        pairs = list(expr.items())
    else:
        expr = list(expr)
        if all(isinstance(x, int) for x in expr):
            pairs = [(tuple(expr), 1)]
        else:
            pairs = [(tuple(w), c) for w, c in expr]
    for w, _ in pairs:
        if any(not 0 <= i < L.n for i in w):
            raise ValueError(f"word {w} has indices outside 0..{L.n - 1}")
    if strategy == "recursive":
        kern = _kernel(L)
        out = {}
        for w, c in pairs:
            c = HPoly.coerce(c)
            for u, d in kern.normal_word(tuple(w)).items():
                _accumulate(out, u, c * d)
        return UhElement._raw(L, out)
    if strategy in ("leftmost", "rightmost"):
        return UhElement._raw(L, _rewrite(L, pairs, strategy == "leftmost"))
    raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")


def uh_mul(A: UhElement, B: UhElement) -> UhElement:
    A._check(B)
    kern = _kernel(A.algebra)
    out = {}
    for u, a in A.terms.items():
        for v, b in B.terms.items():
            ab = a * b
            for w, c in kern.mul_words(u, v).items():
                _accumulate(out, w, ab * c)
    return UhElement._raw(A.algebra, out)


def generator(L, i) -> UhElement:
    if isinstance(i, str):
        i = L.index(i)
    return UhElement._raw(L, {(i,): HPoly.const(1)})


def word(L, letters) -> UhElement:
    """Normal form of a product of generators given by index or name."""
    idx = tuple(L.index(x) if isinstance(x, str) else x for x in letters)
    return pbw_normal_form(L, [(idx, 1)])


def psi_pbw(f: Poly, L) -> UhElement:
    """PBW quantization: the sorted monomial x_i1...x_ik goes to X_i1...X_ik."""
    if f.n != L.n:
        raise ValueError(f"polynomial in {f.n} variables for an algebra of dimension {L.n}")
    return UhElement._raw(L, {_word_of(e): c for e, c in f.terms.items()})


def psi_pbw_inv(A: UhElement) -> Poly:
    n = A.algebra.n
    return Poly._raw(n, {_exponent(n, w): c for w, c in A.terms.items()})


def symmetrize(f: Poly, L) -> UhElement:
    """Symmetrizer quantization: average of all orderings of each monomial."""
    if f.n != L.n:
        raise ValueError(f"polynomial in {f.n} variables for an algebra of dimension {L.n}")
    kern = _kernel(L)
    out = {}
    for e, c in f.terms.items():
        for w, d in kern.sym(e).items():
            _accumulate(out, w, c * d)
    return UhElement._raw(L, out)


def symmetrize_inv(A: UhElement) -> Poly:
    """Inverse of :func:`symmetrize`, peeling off the top word-length each round.

    Sym(f) agrees with psi_pbw(f) in top word-length, with corrections of
    strictly shorter length, so the recursion is triangular.
    """
    L = A.algebra
    rest = A
    out = Poly.zero(L.n)
    while rest:
        d = rest.degree
        top = psi_pbw_inv(UhElement._raw(L, {w: c for w, c in rest.terms.items() if len(w) == d}))
        out = out + top
        rest = rest - symmetrize(top, L)
    return out


def centrality_check(A: UhElement, L=None) -> bool:
    """True iff ``A`` commutes with every generator."""
    L = A.algebra if L is None else L
    for i in range(L.n):
        x = generator(L, i)
        if uh_mul(A, x) != uh_mul(x, A):
            return False
    return True

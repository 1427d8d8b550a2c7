"""Exact coefficients: rationals and polynomials in the deformation parameter h.

Rationals are plain :class:`fractions.Fraction` values.  :class:`HPoly` is an
immutable univariate polynomial over them.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["Fraction", "HPoly", "to_rational", "format_rational", "specialize"]


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats and other inexact values are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"not an exact rational scalar: {value!r}")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class HPoly:
    """Polynomial in h with rational coefficients; ``coeffs[k]`` multiplies h^k."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        self.coeffs = _trim(to_rational(c) for c in coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "HPoly":
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "HPoly":
        return cls((c,))

    @classmethod
    def h(cls, power: int = 1) -> "HPoly":
        return cls._raw((Fraction(0),) * power + (Fraction(1),))

    @classmethod
    def coerce(cls, value) -> "HPoly":
        if isinstance(value, HPoly):
            return value
        return cls((value,))

    # -- queries --
    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree in h; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest power of h present; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeff(0)

    def truncate(self, order: int) -> "HPoly":
        """Reduce modulo h^order."""
        return HPoly._raw(_trim(self.coeffs[:order]))

    def __call__(self, hbar) -> Fraction:
        return specialize(self, hbar)

    # -- arithmetic --
    def __add__(self, other):
        if not isinstance(other, HPoly):
            try:
                other = HPoly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return HPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return HPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, HPoly):
            try:
                other = HPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return HPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, HPoly):
            try:
                q = to_rational(other)
            except TypeError:
                return NotImplemented
            if not q:
                return HPoly._raw(())
            return HPoly._raw(tuple(c * q for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return HPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return HPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = to_rational(other)
        return HPoly._raw(tuple(c / q for c in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an h-polynomial")
        out = HPoly._raw((Fraction(1),))
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "HPoly":
        """Multiply by h^k."""
        if not self.coeffs:
            return self
        return HPoly._raw((Fraction(0),) * k + self.coeffs)

    # -- comparison --
    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == HPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- text --
    def terms(self):
        """Yield ``(power, coefficient)`` for nonzero coefficients."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def __str__(self):
        parts = []
        for k, c in self.terms():
            if k == 0:
                body = format_rational(abs(c))
            else:
                hpart = "h" if k == 1 else f"h^{k}"
                body = hpart if abs(c) == 1 else f"{format_rational(abs(c))}*{hpart}"
            parts.append((c < 0, body))
        if not parts:
            return "0"
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"HPoly({str(self)!r})"


def specialize(p: HPoly, hbar) -> Fraction:
    """Evaluate ``p`` at h = hbar exactly (Horner)."""
    hbar = to_rational(hbar)
    acc = Fraction(0)
    for c in reversed(HPoly.coerce(p).coeffs):
        acc = acc * hbar + c
    return acc

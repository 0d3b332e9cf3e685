"""Exact arithmetic: rationals and elements of a real quadratic field Q(sqrt(D)).

Rationals are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator. :class:`QuadElem` adds the field
Q(sqrt(D)) on top of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigRational = Fraction

Scalar = Union[int, Fraction]


class StructuralError(ValueError):
    """Operands live in different quadratic fields."""


def as_rational(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _square_root_if_square(d: int) -> int | None:
    s = math.isqrt(d)
    return s if s * s == d else None


@dataclass(frozen=True, slots=True)
class QuadElem:
    """The number ``rational + radical * sqrt(radicand)``.

    A perfect-square radicand is folded into the rational part on
    construction, so such elements always have ``radical == 0``.
    """

    rational: Fraction
    radical: Fraction
    radicand: int

    def __init__(self, rational: Scalar = 0, radical: Scalar = 0, radicand: int = 5):
        if not isinstance(radicand, int) or radicand <= 0:
            raise ValueError(f"radicand must be a positive integer, got {radicand!r}")
        a = as_rational(rational)
        b = as_rational(radical)
        s = _square_root_if_square(radicand)
        if s is not None and b:
            a, b = a + b * s, Fraction(0)
        object.__setattr__(self, "rational", a)
        object.__setattr__(self, "radical", b)
        object.__setattr__(self, "radicand", radicand)

    @classmethod
    def sqrt(cls, radicand: int) -> QuadElem:
        return cls(0, 1, radicand)

    def _coerce(self, other: object) -> QuadElem | None:
        if isinstance(other, QuadElem):
            if other.radicand != self.radicand:
                raise StructuralError(
                    f"radicand mismatch: {self.radicand} vs {other.radicand}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(other, 0, self.radicand)
        return None

    @property
    def is_rational(self) -> bool:
        return self.radical == 0

    def conjugate(self) -> QuadElem:
        return QuadElem(self.rational, -self.radical, self.radicand)

    def norm(self) -> Fraction:
        """``a^2 - b^2 D``, the product with the conjugate."""
        return self.rational**2 - self.radical**2 * self.radicand

    def __bool__(self) -> bool:
        return bool(self.rational) or bool(self.radical)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadElem) and other.radicand != self.radicand:
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.rational == o.rational and self.radical == o.radical

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.rational)
        return hash((self.rational, self.radical, self.radicand))

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.rational, -self.radical, self.radicand)

    def __pos__(self) -> QuadElem:
        return self

    def __add__(self, other: object) -> QuadElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.rational + o.rational, self.radical + o.radical, self.radicand)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.rational - o.rational, self.radical - o.radical, self.radicand)

    def __rsub__(self, other: object) -> QuadElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> QuadElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.rational, self.radical, o.rational, o.radical
        return QuadElem(a * c + b * d * self.radicand, a * d + b * c, self.radicand)

    __rmul__ = __mul__

    def inverse(self) -> QuadElem:
        n = self.norm()
        if n == 0:
            # with normalized elements the norm vanishes only at zero
            raise ZeroDivisionError("inverse of zero in Q(sqrt(%d))" % self.radicand)
        return QuadElem(self.rational / n, -self.radical / n, self.radicand)

    def __truediv__(self, other: object) -> QuadElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> QuadElem:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = QuadElem(1, 0, self.radicand)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"QuadElem({self.rational!s}, {self.radical!s}, {self.radicand})"

    def __str__(self) -> str:
        from .render import render_quad

        return render_quad(self)


def qf_add(x: QuadElem, y: QuadElem) -> QuadElem:
    return x + y


def qf_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    return x * y


def qf_inv(x: QuadElem) -> QuadElem:
    return x.inverse()


def sqrt_enclosure(d: int, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic bracket ``lo <= sqrt(d) <= hi`` of width at most ``2**-bits``.

    The bracket at ``bits + 1`` is always inside the bracket at ``bits``.
    """
    if d < 0:
        raise ValueError("negative radicand")
    scale = 1 << bits
    r = math.isqrt(d * scale * scale)
    if r * r == d * scale * scale:
        return Fraction(r, scale), Fraction(r, scale)
    return Fraction(r, scale), Fraction(r + 1, scale)


def qf_to_interval(x: QuadElem, precision_bits: int) -> tuple[Fraction, Fraction]:
    """Rational ``(lo, hi)`` with ``lo <= x <= hi`` and ``hi - lo <= 2**-precision_bits``."""
    if precision_bits < 1:
        raise ValueError("precision_bits must be >= 1")
    if x.is_rational:
        return x.rational, x.rational
    b = abs(x.radical)
    # |b| <= 2**extra so that |b| * 2**-(bits+extra) <= 2**-bits
    extra = max(0, math.ceil(b).bit_length())
    lo, hi = sqrt_enclosure(x.radicand, precision_bits + extra)
    ends = (x.rational + x.radical * lo, x.rational + x.radical * hi)
    return min(ends), max(ends)


PHI = QuadElem(Fraction(1, 2), Fraction(1, 2), 5)

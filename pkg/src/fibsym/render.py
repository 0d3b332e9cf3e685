"""Text rendering of exact values: ``num/den`` and ``a/b + c/d*sqrt(D)``."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from .exactnum import QuadElem


def render_rational(x: Union[int, Fraction]) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def render_quad(x: "QuadElem") -> str:
    if x.is_rational:
        return render_rational(x.rational)
    b = x.radical
    sign = "-" if b < 0 else "+"
    return f"{render_rational(x.rational)} {sign} {render_rational(abs(b))}*sqrt({x.radicand})"


def render_value(x: object) -> str | None:
    from .exactnum import QuadElem

    if x is None:
        return None
    if isinstance(x, QuadElem):
        return render_quad(x)
    if isinstance(x, (int, Fraction)):
        return render_rational(x)
    raise TypeError(f"cannot render {type(x).__name__}")


def render_decimal(x: Fraction, digits: int) -> str:
    """Round ``x`` half away from zero to ``digits`` places after the point."""
    scaled = abs(x) * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    if digits == 0:
        return f"{sign}{q}"
    s = str(q).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def decimal_of(x: object, digits: int) -> str:
    """Decimal rendering of a rational or quadratic value, correct to within one unit in the last place."""
    from .exactnum import QuadElem, qf_to_interval

    if isinstance(x, QuadElem):
        bits = int(digits * 3.33) + 16
        lo, hi = qf_to_interval(x, bits)
        return render_decimal((lo + hi) / 2, digits)
    return render_decimal(Fraction(x), digits)

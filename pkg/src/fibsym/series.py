"""The alternating reciprocal series sum_{k>=1} (-1)^{pk} / (F_{pk} F_{pk+pq}).

Its value is the element of Q(sqrt(5))

    (1/F_{pq}) * sum_{k=1..q} (-1)^{pk} / (phi^{pk} F_{pk}).

Partial sums are exact rationals; the remainder after ``N`` terms is bounded
by a geometric majorant built from ``F_m >= phi^(m-2)`` (m >= 1) and an upper
rational bound on ``1/phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import PHI, QuadElem, qf_to_interval
from .sequences import fibonacci


class IntegrityError(RuntimeError):
    """The closed form fell outside a certified enclosure."""


@dataclass(frozen=True)
class SeriesSpec:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"p and q must be >= 1, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class SeriesEstimate:
    partial: Fraction
    n_terms: int
    tail_radius: Fraction
    closed: QuadElem

    @property
    def lower(self) -> Fraction:
        return self.partial - self.tail_radius

    @property
    def upper(self) -> Fraction:
        return self.partial + self.tail_radius


def term(spec: SeriesSpec, k: int) -> Fraction:
    p, q = spec.p, spec.q
    sign = -1 if (p * k) % 2 else 1
    return Fraction(sign, fibonacci(p * k) * fibonacci(p * k + p * q))


def partial_sum(spec: SeriesSpec, N: int) -> Fraction:
    if N < 1:
        raise ValueError("N must be >= 1")
    return sum((term(spec, k) for k in range(1, N + 1)), Fraction(0))


def closed_form(spec: SeriesSpec) -> QuadElem:
    p, q = spec.p, spec.q
    phi_inv = PHI.inverse()
    total = QuadElem(0, 0, 5)
    for k in range(1, q + 1):
        sign = -1 if (p * k) % 2 else 1
        total += phi_inv ** (p * k) * Fraction(sign, fibonacci(p * k))
    return total / fibonacci(p * q)


_PHI_INV_HI = qf_to_interval(PHI.inverse(), 64)[1]


def _round_up(x: Fraction, sig_bits: int = 64) -> Fraction:
    """Smallest dyadic with about ``sig_bits`` significant bits that is >= x."""
    if x <= 0:
        return Fraction(0)
    e = x.numerator.bit_length() - x.denominator.bit_length()
    m = sig_bits - e
    if m >= 0:
        num, den = x.numerator << m, x.denominator
        return Fraction(-(-num // den), 1 << m)
    num, den = x.numerator, x.denominator << -m
    return Fraction(-(-num // den) << -m)


def tail_bound(spec: SeriesSpec, N: int) -> Fraction:
    """Certified upper bound on ``|sum_{k>N} term_k|``.

    term_k <= phi^-(pk-2) * phi^-(pk+pq-2), so the remainder is at most
    phi^-(2p(N+1) + pq - 4) / (1 - phi^-2p).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    p, q = spec.p, spec.q
    exponent = 2 * p * (N + 1) + p * q - 4
    r = _PHI_INV_HI
    return _round_up(r**exponent / (1 - r ** (2 * p)))


def _contains(estimate: SeriesEstimate) -> bool | None:
    """True/False once decided; None if more precision is needed."""
    lo, hi = estimate.lower, estimate.upper
    for bits in (64, 128, 256, 512, 1024, 4096):
        c_lo, c_hi = qf_to_interval(estimate.closed, bits)
        if lo <= c_lo and c_hi <= hi:
            return True
        if c_hi < lo or c_lo > hi:
            return False
    return None


def estimate_at(spec: SeriesSpec, N: int) -> SeriesEstimate:
    est = SeriesEstimate(partial_sum(spec, N), N, tail_bound(spec, N), closed_form(spec))
    if _contains(est) is not True:
        raise IntegrityError(
            f"closed form {est.closed} not certified inside "
            f"[{est.lower}, {est.upper}] for p={spec.p}, q={spec.q}, N={N}"
        )
    return est


def evaluate(spec: SeriesSpec, target_radius: Fraction) -> SeriesEstimate:
    """Estimate with the fewest terms whose certified radius is <= ``target_radius``."""
    target_radius = Fraction(target_radius)
    if target_radius <= 0:
        raise ValueError("target_radius must be positive")
    # tail_bound is strictly decreasing in N: gallop, then bisect
    lo, hi = 0, 1
    while tail_bound(spec, hi) > target_radius:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail_bound(spec, mid) > target_radius:
            lo = mid
        else:
            hi = mid
    return estimate_at(spec, hi)

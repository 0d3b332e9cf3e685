from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsym.exactnum import (
    PHI,
    QuadElem,
    StructuralError,
    qf_add,
    qf_inv,
    qf_mul,
    qf_to_interval,
    sqrt_enclosure,
)
from fibsym.render import decimal_of, render_quad

HALF = Fraction(1, 2)
BETA5 = QuadElem(HALF, -HALF, 5)


def q5(a, b):
    return QuadElem(a, b, 5)


def test_add_examples():
    assert qf_add(q5(1, 0), q5(0, 1)) == q5(1, 1)
    assert qf_add(PHI, BETA5) == 1
    x = q5(Fraction(3, 7), -2)
    assert qf_add(q5(0, 0), x) == x


def test_mul_examples():
    assert qf_mul(PHI, PHI) == PHI + 1
    assert qf_mul(PHI, PHI) == q5(Fraction(3, 2), HALF)
    assert qf_mul(q5(2, 0), q5(0, 3)) == q5(0, 6)


@pytest.mark.parametrize("P,Q", [(1, -1), (3, 2), (5, 3), (2, -1), (7, 1)])
def test_conjugate_roots_product(P, Q):
    d = P * P - 4 * Q
    alpha = QuadElem(Fraction(P, 2), HALF, d)
    beta = QuadElem(Fraction(P, 2), -HALF, d)
    assert alpha * beta == Q
    assert alpha + beta == P


def test_inverse_examples():
    assert qf_inv(PHI) == PHI - 1
    assert qf_inv(PHI) == q5(-HALF, HALF)
    assert qf_inv(q5(2, 0)) == HALF
    inv = qf_inv(q5(1, 1))
    assert inv == q5(Fraction(-1, 4), Fraction(1, 4))
    assert inv * q5(1, 1) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        qf_inv(q5(0, 0))


def test_radicand_mismatch():
    with pytest.raises(StructuralError):
        q5(1, 1) + QuadElem(1, 1, 2)
    with pytest.raises(StructuralError):
        q5(1, 1) * QuadElem(1, 1, 2)


def test_perfect_square_radicand_is_folded():
    x = QuadElem(1, 2, 9)
    assert x.radical == 0 and x.rational == 7
    assert x.is_rational
    assert QuadElem(Fraction(3, 2), HALF, 1) == 2


def test_powers():
    assert PHI**0 == 1
    assert PHI**2 == PHI + 1
    assert PHI**-1 == PHI - 1
    # phi^n = F_n phi + F_{n-1}
    assert PHI**10 == 55 * PHI + 34


def test_interval_rational():
    assert qf_to_interval(q5(3, 0), 8) == (3, 3)


def _bisect_sqrt(d, bits):
    lo, hi = Fraction(0), Fraction(d + 1)
    while hi - lo > Fraction(1, 2**bits):
        mid = (lo + hi) / 2
        if mid * mid <= d:
            lo = mid
        else:
            hi = mid
    return lo, hi


def test_interval_sqrt5_against_bisection():
    lo, hi = qf_to_interval(q5(0, 1), 20)
    assert hi - lo <= Fraction(1, 2**20)
    assert lo * lo <= 5 <= hi * hi
    b_lo, b_hi = _bisect_sqrt(5, 20)
    # both brackets contain sqrt(5), so they overlap
    assert max(lo, b_lo) <= min(hi, b_hi)
    assert lo <= Fraction(22360679, 10**7) <= hi


def test_interval_phi():
    lo, hi = qf_to_interval(PHI, 30)
    assert hi - lo <= Fraction(1, 2**30)
    assert lo <= Fraction(16180339887, 10**10) <= hi


def test_interval_nesting():
    x = q5(Fraction(-7, 3), Fraction(11, 5))
    prev = qf_to_interval(x, 1)
    for bits in range(2, 80, 3):
        cur = qf_to_interval(x, bits)
        assert prev[0] <= cur[0] <= cur[1] <= prev[1]
        assert cur[1] - cur[0] <= Fraction(1, 2**bits)
        prev = cur


def test_sqrt_enclosure_exact_square():
    assert sqrt_enclosure(49, 10) == (7, 7)


def test_interval_precision_must_be_positive():
    with pytest.raises(ValueError):
        qf_to_interval(PHI, 0)


def test_rendering():
    assert render_quad(q5(HALF, -HALF)) == "1/2 - 1/2*sqrt(5)"
    assert str(PHI) == "1/2 + 1/2*sqrt(5)"
    assert str(q5(3, 0)) == "3"
    assert decimal_of(PHI, 10) == "1.6180339887"
    assert decimal_of(BETA5, 5) == "-0.61803"


rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
radicands = st.sampled_from([2, 3, 5, 13, 17, 21])


@st.composite
def triples(draw):
    d = draw(radicands)
    return [QuadElem(draw(rationals), draw(rationals), d) for _ in range(3)]


@settings(max_examples=300)
@given(triples())
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@settings(max_examples=300)
@given(triples())
def test_inverse_property(xyz):
    x = xyz[0]
    if x:
        assert qf_mul(x, qf_inv(x)) == 1
        assert x / x == 1


@given(rationals, rationals)
def test_rational_canonical_form(a, b):
    for v in (a + b, a * b, -a):
        assert v.denominator > 0
        assert v == Fraction(v.numerator, v.denominator)
    if b:
        inv = 1 / b
        assert inv.denominator > 0
    assert (Fraction(0).numerator, Fraction(0).denominator) == (0, 1)

from fractions import Fraction

import pytest

from fibsym.exactnum import PHI, QuadElem, qf_to_interval
from fibsym.series import (
    IntegrityError,
    SeriesEstimate,
    SeriesSpec,
    closed_form,
    estimate_at,
    evaluate,
    partial_sum,
    tail_bound,
    term,
)
from fibsym.sequences import fibonacci

import fibsym.series as series_mod


def test_partial_sum_examples():
    assert partial_sum(SeriesSpec(1, 1), 1) == -1
    assert partial_sum(SeriesSpec(1, 1), 3) == Fraction(-2, 3)
    s = SeriesSpec(2, 1)
    sums = [partial_sum(s, N) for N in range(1, 15)]
    assert all(a < b for a, b in zip(sums, sums[1:]))


def test_closed_form_examples():
    assert closed_form(SeriesSpec(1, 1)) == QuadElem(Fraction(1, 2), Fraction(-1, 2), 5)
    assert closed_form(SeriesSpec(2, 1)) == PHI**-2
    assert closed_form(SeriesSpec(2, 1)) == QuadElem(Fraction(3, 2), Fraction(-1, 2), 5)
    assert closed_form(SeriesSpec(1, 2)) == -(PHI**-1) + PHI**-2


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (3, 2), (4, 4)])
def test_closed_form_scaling(p, q):
    rhs = sum(
        (PHI ** (-p * k) * Fraction((-1) ** (p * k), fibonacci(p * k)) for k in range(1, q + 1)),
        QuadElem(0, 0, 5),
    )
    assert closed_form(SeriesSpec(p, q)) * fibonacci(p * q) == rhs


def test_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec(0, 1)
    with pytest.raises(ValueError):
        partial_sum(SeriesSpec(1, 1), 0)


def test_tail_bound_decreasing():
    for p, q in [(1, 1), (2, 3), (4, 1)]:
        s = SeriesSpec(p, q)
        bounds = [tail_bound(s, N) for N in range(1, 40)]
        assert all(a > b for a, b in zip(bounds, bounds[1:]))


def test_tail_bound_small():
    assert tail_bound(SeriesSpec(1, 1), 30) < Fraction(1, 10**10)


def _exact_tail_enclosure(spec, N):
    lo, hi = qf_to_interval(closed_form(spec) - partial_sum(spec, N), 400)
    return max(abs(lo), abs(hi))


@pytest.mark.parametrize("p", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_tail_bound_dominates(p, q):
    s = SeriesSpec(p, q)
    for N in (1, 2, 5, 10, 20, 40):
        b = tail_bound(s, N)
        assert b >= _exact_tail_enclosure(s, N)
        assert b >= abs(term(s, N + 1))


@pytest.mark.parametrize("p", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_containment(p, q):
    for N in (5, 10, 20, 40):
        est = estimate_at(SeriesSpec(p, q), N)
        lo, hi = qf_to_interval(est.closed, 256)
        assert est.lower <= lo and hi <= est.upper


def test_evaluate_examples():
    est = evaluate(SeriesSpec(1, 1), Fraction(1, 10**12))
    assert est.closed == QuadElem(Fraction(1, 2), Fraction(-1, 2), 5)
    assert est.tail_radius <= Fraction(1, 10**12)
    assert tail_bound(SeriesSpec(1, 1), est.n_terms - 1) > Fraction(1, 10**12)
    est = evaluate(SeriesSpec(1, 2), Fraction(1, 10**8))
    assert est.closed == -(PHI**-1) + PHI**-2


def test_evaluate_monotone_in_radius():
    s = SeriesSpec(2, 3)
    radii = [Fraction(1, 10**e) for e in range(30, 0, -3)]
    counts = [evaluate(s, r).n_terms for r in radii]
    assert all(a >= b for a, b in zip(counts, counts[1:]))


def test_evaluate_rejects_nonpositive_radius():
    with pytest.raises(ValueError):
        evaluate(SeriesSpec(1, 1), Fraction(0))


def test_bruckman_good_specialization():
    # q = 1: the series equals (-1)^p / (phi^p F_p^2)
    for p in range(1, 6):
        expected = PHI ** (-p) * Fraction((-1) ** p, fibonacci(p) ** 2)
        assert evaluate(SeriesSpec(p, 1), Fraction(1, 10**20)).closed == expected


def test_containment_failure_raises(monkeypatch):
    wrong = QuadElem(1, 1, 5)
    monkeypatch.setattr(series_mod, "closed_form", lambda spec: wrong)
    with pytest.raises(IntegrityError):
        estimate_at(SeriesSpec(1, 1), 10)


def test_estimate_bounds():
    est = SeriesEstimate(Fraction(1), 3, Fraction(1, 4), QuadElem(1, 0, 5))
    assert est.lower == Fraction(3, 4) and est.upper == Fraction(5, 4)

import random
import threading
from fractions import Fraction

import pytest

from conftest import horadam_terms, recurrence_terms
from fibsym.exactnum import PHI
from fibsym.sequences import (
    FIBONACCI_SEEDS,
    LUCAS_SEEDS,
    HoradamParams,
    SeedPair,
    SequenceHandle,
    alpha_beta,
    binet_w,
    fibonacci,
    gen_fib,
    horadam_u,
    horadam_w,
    lucas,
)

H3 = HoradamParams(0, 1, 3, 2)


def test_gen_fib_examples():
    assert gen_fib(FIBONACCI_SEEDS, 0) == 0
    assert gen_fib(LUCAS_SEEDS, 4) == 7
    assert gen_fib(FIBONACCI_SEEDS, -5) == 5


def test_fibonacci_lucas_examples():
    assert fibonacci(10) == 55
    assert lucas(0) == 2
    assert fibonacci(-6) == -8


def test_fast_doubling_matches_iteration(fib_oracle):
    luc = recurrence_terms(2, 1, -120, 520)
    for i in range(0, 501):
        assert fibonacci(i) == fib_oracle(i)
        assert lucas(i) == luc[i]
    for i in range(-120, 0):
        assert fibonacci(i) == fib_oracle(i)
        assert lucas(i) == luc[i]


def test_fibonacci_negative_index_parity():
    for i in range(0, 101):
        assert fibonacci(-i) == (-1) ** (i + 1) * fibonacci(i)


@pytest.mark.parametrize("seeds", [(0, 1), (2, 1), (1, 4), (3, -1), (-5, 7)])
def test_gen_fib_matches_recurrence(seeds):
    table = recurrence_terms(*seeds, -60, 200)
    for i in range(-60, 201):
        assert gen_fib(SeedPair(*seeds), i) == table[i]
    for i in range(-59, 200):
        assert gen_fib(SeedPair(*seeds), i + 1) == gen_fib(SeedPair(*seeds), i) + gen_fib(
            SeedPair(*seeds), i - 1
        )


def test_large_index():
    n = 1000
    assert fibonacci(2 * n) == fibonacci(n) * lucas(n)


def test_horadam_examples():
    assert horadam_w(H3, 4) == 15
    assert horadam_w(HoradamParams(5, -2, 3, 2), 1) == -2
    assert horadam_w(H3, -1) == Fraction(-1, 2)
    assert horadam_u(H3, 0) == 0
    assert horadam_u(HoradamParams(4, 9, 1, -1), 7) == 13
    assert horadam_u(H3, 5) == 31


@pytest.mark.parametrize("params", [(0, 1, 3, 2), (2, 1, 1, -1), (1, 2, 5, 3), (0, 1, 2, -1), (3, -4, 7, 5)])
def test_horadam_matches_recurrence(params):
    table = horadam_terms(*params, -30, 80)
    H = HoradamParams(*params)
    for i in range(-30, 81):
        assert horadam_w(H, i) == table[i]


def test_horadam_specializes_to_gen_fib():
    for g0, g1 in [(0, 1), (2, 1), (3, 2), (1, -1)]:
        H = HoradamParams(g0, g1, 1, -1)
        for i in range(0, 60):
            assert horadam_w(H, i) == gen_fib(SeedPair(g0, g1), i)


def test_horadam_params_validation():
    with pytest.raises(ValueError):
        HoradamParams(0, 1, 0, 1)
    with pytest.raises(ValueError):
        HoradamParams(0, 1, 2, 1)  # delta = 0
    with pytest.raises(ValueError):
        HoradamParams(0, 1, 1, 1)  # delta < 0


def test_alpha_beta_examples():
    alpha, beta = alpha_beta(HoradamParams(0, 1, 1, -1))
    assert alpha == PHI and beta == 1 - PHI
    alpha, beta = alpha_beta(H3)
    assert alpha == 2 and beta == 1
    assert alpha.is_rational and beta.is_rational


def test_vieta_randomized():
    rng = random.Random(7)
    for _ in range(200):
        P = rng.choice([x for x in range(-9, 10) if x])
        Q = rng.choice([x for x in range(-9, 10) if x and P * P - 4 * x > 0] or [-1])
        H = HoradamParams(rng.randint(-5, 5), rng.randint(-5, 5), P, Q)
        alpha, beta = alpha_beta(H)
        assert alpha * beta == Q
        assert alpha + beta == P


def test_binet_examples():
    H = HoradamParams(4, -3, 5, 3)
    assert binet_w(H, 0) == 4
    assert binet_w(H, 1) == -3
    assert binet_w(H3, 4) == 15
    with pytest.raises(ValueError):
        binet_w(H3, -1)


def _random_params(rng):
    while True:
        P, Q = rng.randint(-6, 6), rng.randint(-6, 6)
        if P and Q and P * P - 4 * Q > 0:
            return HoradamParams(rng.randint(-5, 5), rng.randint(-5, 5), P, Q)


def test_binet_matches_recurrence_randomized():
    rng = random.Random(11)
    for _ in range(40):
        H = _random_params(rng)
        table = horadam_terms(H.a, H.b, H.P, H.Q, 0, 50)
        for i in range(0, 51):
            assert binet_w(H, i) == table[i]


def test_printed_numerator_fails_seeds():
    # (a alpha^i - b beta^i)/(alpha - beta) does not reproduce W_0 = a in general
    H = HoradamParams(2, 1, 1, -1)
    alpha, beta = alpha_beta(H)
    printed = (H.a * alpha**0 - H.b * beta**0) / (alpha - beta)
    assert printed != H.a


def test_handle_cache_is_consistent_under_threads():
    handle = SequenceHandle.of_horadam(HoradamParams(1, 2, 5, 3))
    table = horadam_terms(1, 2, 5, 3, -40, 300)
    errors = []

    def worker(seed):
        rng = random.Random(seed)
        for _ in range(400):
            i = rng.randint(-40, 300)
            if handle[i] != table[i]:
                errors.append(i)

    threads = [threading.Thread(target=worker, args=(s,)) for s in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors


def test_handle_kinds():
    assert SequenceHandle.of_fibonacci().terms(0, 10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert SequenceHandle.of_lucas().terms(0, 4) == [2, 1, 3, 4, 7]
    assert SequenceHandle.of_horadam(H3).terms(0, 4) == [0, 1, 3, 7, 15]
    assert SequenceHandle.of_horadam_u(HoradamParams(9, 9, 3, 2)).terms(0, 4) == [0, 1, 3, 7, 15]
    assert SequenceHandle.of_seeds(SeedPair(2, 1))[-3] == lucas(-3)

"""Fibonacci, Lucas, seeded Fibonacci-type and Horadam sequences.

All sequences are extended to negative indices by running the recurrence
backwards. Horadam values are returned as fractions because the backward
step divides by ``Q``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from .exactnum import QuadElem


class SeedPair(NamedTuple):
    g0: int
    g1: int

    def scaled(self, m: int) -> SeedPair:
        return SeedPair(m * self.g0, m * self.g1)


FIBONACCI_SEEDS = SeedPair(0, 1)
LUCAS_SEEDS = SeedPair(2, 1)


@dataclass(frozen=True)
class HoradamParams:
    """Seeds ``W_0 = a, W_1 = b`` of ``W_i = P W_{i-1} - Q W_{i-2}``."""

    a: int
    b: int
    P: int
    Q: int

    def __post_init__(self) -> None:
        if self.P * self.Q == 0:
            raise ValueError(f"P*Q must be nonzero (P={self.P}, Q={self.Q})")
        if self.delta <= 0:
            raise ValueError(f"discriminant P^2 - 4Q must be positive, got {self.delta}")

    @property
    def delta(self) -> int:
        return self.P * self.P - 4 * self.Q

    def companion(self) -> HoradamParams:
        """Parameters of ``U``: same recurrence, seeds (0, 1)."""
        return HoradamParams(0, 1, self.P, self.Q)

    def scaled(self, m: int) -> HoradamParams:
        return HoradamParams(m * self.a, m * self.b, self.P, self.Q)

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.P},{self.Q}"


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) for n >= 0 by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


@lru_cache(maxsize=4096)
def fibonacci(i: int) -> int:
    if i >= 0:
        return _fib_pair(i)[0]
    f = _fib_pair(-i)[0]
    return f if i % 2 else -f


@lru_cache(maxsize=4096)
def lucas(i: int) -> int:
    # L_i = F_{i-1} + F_{i+1}
    return fibonacci(i - 1) + fibonacci(i + 1)


def gen_fib(seeds: SeedPair, i: int) -> int:
    """G_i for the seeds ``(G_0, G_1)``, via ``G_i = G_0 F_{i-1} + G_1 F_i``."""
    g0, g1 = seeds
    return g0 * fibonacci(i - 1) + g1 * fibonacci(i)


class Kind(enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    SEEDED = "seeded"
    HORADAM_W = "horadam"
    HORADAM_U = "horadam-u"


Value = Union[int, Fraction]


class SequenceHandle:
    """Memoized access to one sequence at arbitrary integer indices.

    The cache is append-only and guarded by a lock, so concurrent readers
    only ever observe completed entries.
    """

    def __init__(self, kind: Kind, seeds: SeedPair | None = None,
                 params: HoradamParams | None = None):
        if kind is Kind.SEEDED and seeds is None:
            raise ValueError("seeded sequence needs a SeedPair")
        if kind in (Kind.HORADAM_W, Kind.HORADAM_U) and params is None:
            raise ValueError("Horadam sequence needs HoradamParams")
        if kind is Kind.HORADAM_U:
            params = params.companion()
        self.kind = kind
        self.seeds = seeds
        self.params = params
        self._cache: dict[int, Value] = {}
        self._lock = threading.Lock()
        if params is not None:
            self._cache[0] = Fraction(params.a)
            self._cache[1] = Fraction(params.b)
            self._lo, self._hi = 0, 1

    @classmethod
    def of_fibonacci(cls) -> SequenceHandle:
        return cls(Kind.FIBONACCI)

    @classmethod
    def of_lucas(cls) -> SequenceHandle:
        return cls(Kind.LUCAS)

    @classmethod
    def of_seeds(cls, seeds: SeedPair) -> SequenceHandle:
        return cls(Kind.SEEDED, seeds=SeedPair(*seeds))

    @classmethod
    def of_horadam(cls, params: HoradamParams) -> SequenceHandle:
        return cls(Kind.HORADAM_W, params=params)

    @classmethod
    def of_horadam_u(cls, params: HoradamParams) -> SequenceHandle:
        return cls(Kind.HORADAM_U, params=params)

    def __getitem__(self, i: int) -> Value:
        try:
            return self._cache[i]
        except KeyError:
            pass
        with self._lock:
            if i not in self._cache:
                self._fill(i)
            return self._cache[i]

    def __call__(self, i: int) -> Value:
        return self[i]

    def _fill(self, i: int) -> None:
        if self.kind is Kind.FIBONACCI:
            self._cache[i] = fibonacci(i)
        elif self.kind is Kind.LUCAS:
            self._cache[i] = lucas(i)
        elif self.kind is Kind.SEEDED:
            self._cache[i] = gen_fib(self.seeds, i)
        else:
            self._extend_horadam(i)

    def _extend_horadam(self, i: int) -> None:
        P, Q = self.params.P, self.params.Q
        c = self._cache
        while self._hi < i:
            h = self._hi
            c[h + 1] = P * c[h] - Q * c[h - 1]
            self._hi = h + 1
        while self._lo > i:
            lo = self._lo
            # W_{i-2} = (P W_{i-1} - W_i) / Q
            c[lo - 1] = (P * c[lo] - c[lo + 1]) / Q
            self._lo = lo - 1

    def terms(self, start: int, stop: int) -> list[Value]:
        """Values at ``start..stop`` inclusive."""
        return [self[i] for i in range(start, stop + 1)]


@lru_cache(maxsize=256)
def seeded_handle(seeds: SeedPair) -> SequenceHandle:
    return SequenceHandle.of_seeds(seeds)


@lru_cache(maxsize=256)
def horadam_handle(params: HoradamParams) -> SequenceHandle:
    return SequenceHandle.of_horadam(params)


def horadam_w(params: HoradamParams, i: int) -> Fraction:
    return horadam_handle(params)[i]


def horadam_u(params: HoradamParams, i: int) -> Fraction:
    return horadam_handle(params.companion())[i]


def alpha_beta(params: HoradamParams) -> tuple[QuadElem, QuadElem]:
    """Roots ``(P + sqrt(delta))/2`` and ``(P - sqrt(delta))/2`` of ``x^2 - P x + Q``."""
    half = Fraction(1, 2)
    d = params.delta
    return (QuadElem(params.P * half, half, d), QuadElem(params.P * half, -half, d))


def binet_coefficients(params: HoradamParams) -> tuple[QuadElem, QuadElem]:
    """``A = b - beta*a`` and ``B = b - alpha*a``."""
    alpha, beta = alpha_beta(params)
    return params.b - beta * params.a, params.b - alpha * params.a


def binet_w(params: HoradamParams, i: int) -> QuadElem:
    """Closed form ``(A alpha^i - B beta^i) / (alpha - beta)`` of ``W_i``, i >= 0."""
    if i < 0:
        raise ValueError("binet_w needs i >= 0")
    alpha, beta = alpha_beta(params)
    A, B = binet_coefficients(params)
    return (A * alpha**i - B * beta**i) / (alpha - beta)

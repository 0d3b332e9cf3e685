"""Both sides of the three symmetric telescoping lemmas, for any exact-valued f.

With ``g(k) = f(u k)`` each lemma compares two finite sums of shifted
differences of ``g``:

* ``fs``:  sum_{k=1..w} [f(uk+uv) - f(uk)]  =  sum_{k=1..v} [f(uk+uw) - f(uk)]
* ``fs1``: same with weight ``sign**(k-1)``; needs ``v`` and ``w`` even
* ``fs2``: sum_{k=1..w} (-1)**(k-1) [f(uk+uv) + f(uk)] = (v <-> w); needs ``v*w`` odd

Values only need ``+``, ``-`` and ``==``, so Fractions and QuadElems both work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


class DomainError(ValueError):
    """A lemma was invoked outside its hypothesis."""


class SequenceEvaluationError(ArithmeticError):
    """``f`` could not be evaluated at some index."""

    def __init__(self, index: int, cause: BaseException):
        super().__init__(f"f({index}) failed: {cause}")
        self.index = index
        self.cause = cause


@dataclass(frozen=True)
class AbstractSequence:
    """A deterministic map from integer index to a field element."""

    eval: Callable[[int], Any]
    name: str = "f"

    def __call__(self, k: int) -> Any:
        try:
            return self.eval(k)
        except SequenceEvaluationError:
            raise
        except ArithmeticError as exc:
            raise SequenceEvaluationError(k, exc) from exc


@dataclass(frozen=True)
class LemmaSides:
    lhs: Any
    rhs: Any
    term_count_lhs: int
    term_count_rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _check_positive(**kw: int) -> None:
    for name, value in kw.items():
        if not isinstance(value, int) or value < 1:
            raise DomainError(f"{name} must be a positive integer, got {value!r}")


def _weighted_sum(terms, weight):
    total = 0
    for k, term in enumerate(terms, start=1):
        w = weight(k)
        total = total + term if w == 1 else total - term
    return total


def _side(f, u: int, shift: int, count: int, weight, combine) -> Any:
    terms = (combine(f(u * k + u * shift), f(u * k)) for k in range(1, count + 1))
    return _weighted_sum(terms, weight)


def _diff(x, y):
    return x - y


def _sum(x, y):
    return x + y


def _one(k: int) -> int:
    return 1


def _alternating(k: int) -> int:
    return 1 if k % 2 else -1


def telescope_fs(f: AbstractSequence, u: int, v: int, w: int) -> LemmaSides:
    _check_positive(u=u, v=v, w=w)
    return LemmaSides(
        _side(f, u, v, w, _one, _diff),
        _side(f, u, w, v, _one, _diff),
        w,
        v,
    )


def telescope_fs1(f: AbstractSequence, u: int, v: int, w: int, sign: int) -> LemmaSides:
    _check_positive(u=u, v=v, w=w)
    if v % 2 or w % 2:
        raise DomainError(f"fs1 needs v and w even, got v={v}, w={w}")
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    weight = _one if sign == 1 else _alternating
    return LemmaSides(
        _side(f, u, v, w, weight, _diff),
        _side(f, u, w, v, weight, _diff),
        w,
        v,
    )


def telescope_fs2(f: AbstractSequence, u: int, v: int, w: int) -> LemmaSides:
    _check_positive(u=u, v=v, w=w)
    if (v * w) % 2 == 0:
        raise DomainError(f"fs2 needs v*w odd, got v={v}, w={w}")
    return LemmaSides(
        _side(f, u, v, w, _alternating, _sum),
        _side(f, u, w, v, _alternating, _sum),
        w,
        v,
    )

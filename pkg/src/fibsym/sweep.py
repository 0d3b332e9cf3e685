"""Exhaustive grid sweeps over identity parameters, hunting counterexamples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .identities import (
    CATALOG,
    DEFAULT_HORADAM,
    CheckResult,
    IdentityId,
    IdentityParams,
    eval_sides,
)
from .render import render_value
from .sequences import FIBONACCI_SEEDS, HoradamParams, SeedPair


@dataclass(frozen=True)
class Grid:
    """Value lists per parameter; an identity only ranges over its own fields."""

    p: Sequence[int] = (1,)
    q: Sequence[int] = (1,)
    n: Sequence[int] = (1,)
    t: Sequence[int] = (0,)
    seeds: Sequence[SeedPair] = (FIBONACCI_SEEDS,)
    sign: Sequence[int] = (1, -1)
    horadam: Sequence[HoradamParams] = (DEFAULT_HORADAM,)
    a: Sequence[int] = (0,)
    b: Sequence[int] = (0,)
    c: Sequence[int] = (0,)
    k: Sequence[int] = (1,)

    def axes(self, fields: Iterable[str]) -> dict[str, list]:
        return {f: list(getattr(self, f)) for f in fields}

    def points(self, fields: Sequence[str]) -> Iterable[dict]:
        axes = self.axes(fields)
        for values in itertools.product(*axes.values()):
            yield dict(zip(axes, values))


def _render_param(name: str, value) -> object:
    if name == "seeds":
        return f"{value[0]},{value[1]}"
    if name == "horadam":
        return str(value)
    return value


@dataclass
class PointResult:
    values: dict
    result: CheckResult

    def as_dict(self) -> dict:
        r = self.result
        return {
            "params": {k: _render_param(k, v) for k, v in self.values.items()},
            "status": r.status,
            "hypothesis_ok": r.hypothesis_ok,
            "lhs": render_value(r.lhs),
            "rhs": render_value(r.rhs),
            "agree": r.agree,
            "diagnostics": [
                {"index": i, "reason": reason} for i, reason in r.diagnostics
            ],
        }


@dataclass
class SweepReport:
    identity: IdentityId
    grid: dict
    points: list[PointResult] = field(default_factory=list)

    def _select(self, pred) -> list[PointResult]:
        return [pt for pt in self.points if pred(pt.result)]

    @property
    def checked(self) -> int:
        return sum(1 for pt in self.points if pt.result.domain_ok)

    @property
    def passed(self) -> int:
        return sum(1 for pt in self.points if pt.result.status == "pass")

    @property
    def domain_skipped(self) -> int:
        return len(self.points) - self.checked

    @property
    def counterexamples(self) -> list[PointResult]:
        """In-hypothesis points where the two sides differ."""
        return self._select(lambda r: r.status == "fail")

    @property
    def outside_evaluated(self) -> list[PointResult]:
        return self._select(lambda r: not r.hypothesis_ok and r.denominators_ok)

    @property
    def outside_failures(self) -> list[PointResult]:
        """Points outside the stated hypothesis where the sides differ."""
        return [pt for pt in self.outside_evaluated if not pt.result.agree]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> dict:
        outside = self.outside_evaluated
        bad = self.outside_failures
        return {
            "points": len(self.points),
            "checked": self.checked,
            "passed": self.passed,
            "failed": len(self.counterexamples),
            "domain_skipped": self.domain_skipped,
            "outside_hypothesis_evaluated": len(outside),
            "outside_hypothesis_agree": len(outside) - len(bad),
            "outside_hypothesis_disagree": len(bad),
        }

    def as_dict(self, include_points: bool = True) -> dict:
        d = {
            "identity": self.identity.value,
            "grid": {
                k: [_render_param(k, v) for v in vs] for k, vs in self.grid.items()
            },
            "summary": self.summary(),
            "counterexamples": [pt.as_dict() for pt in self.counterexamples],
            "outside_hypothesis_failures": [pt.as_dict() for pt in self.outside_failures],
        }
        if include_points:
            d["points"] = [pt.as_dict() for pt in self.points]
        return d


def sweep(id: IdentityId, grid: Grid) -> SweepReport:
    """Evaluate ``id`` at every grid point, in grid order."""
    fields = CATALOG[id].fields
    report = SweepReport(id, grid.axes(fields))
    for values in grid.points(fields):
        report.points.append(PointResult(values, eval_sides(id, IdentityParams(**values))))
    return report

"""Catalog of symmetry identities for Fibonacci-type and Horadam sequences.

Every entry pairs a hypothesis predicate with a direct-summation evaluator for
each side. For the symmetric sum identities both sides come from one function
``side(params, shift, count)``: the left side is ``side(q, n)`` and the right
side is ``side(n, q)``, so exchanging q and n exchanges the sides exactly.

A second, independent route (:func:`rederive`) recomputes both sides through
the telescoping lemmas with the sequence ``f`` and step sizes that make each
identity collapse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Optional

from .exactnum import QuadElem, qf_to_interval
from .sequences import (
    FIBONACCI_SEEDS,
    HoradamParams,
    SeedPair,
    alpha_beta,
    binet_coefficients,
    fibonacci,
    horadam_handle,
    lucas,
    seeded_handle,
)
from .series import SeriesSpec, closed_form, partial_sum
from .telescope import (
    AbstractSequence,
    SequenceEvaluationError,
    telescope_fs,
    telescope_fs1,
    telescope_fs2,
)


class IdentityId(enum.Enum):
    GoodEq1 = "good"
    MainEq2 = "main"
    ThmEvenPM = "even-pm"
    T1a = "t1a"
    T1b = "t1b"
    TX = "tx"
    T5 = "t5"
    T9 = "t9"
    T8 = "t8"
    R1a = "r1a"
    R1b = "r1b"
    R2 = "r2"
    R3 = "r3"
    R4 = "r4"
    HowardCor35 = "howard"
    Vajda10a = "vajda10a"
    Vajda21 = "vajda21"
    Jeannin41 = "jeannin41"
    HorW = "horw"
    HorWEven = "horw-even"

    @classmethod
    def parse(cls, name: str) -> IdentityId:
        key = name.strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise KeyError(name)


DEFAULT_HORADAM = HoradamParams(0, 1, 1, -1)


@dataclass(frozen=True)
class IdentityParams:
    p: int = 1
    q: int = 1
    n: int = 1
    t: int = 0
    seeds: SeedPair = FIBONACCI_SEEDS
    horadam: HoradamParams = DEFAULT_HORADAM
    sign: int = 1
    a: int = 0
    b: int = 0
    c: int = 0
    k: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "seeds", SeedPair(*self.seeds))

    def swapped(self) -> IdentityParams:
        return replace(self, q=self.n, n=self.q)


Diagnostic = tuple[Optional[int], str]


@dataclass
class CheckResult:
    """Both sides of one identity instance and the verdict.

    ``lhs``/``rhs`` are None when some denominator vanished. ``equal`` is
    only set when the hypothesis holds and every denominator is nonzero;
    ``agree`` is the raw comparison whenever both sides exist.
    """

    lhs: Any
    rhs: Any
    hypothesis_ok: bool
    denominators_ok: bool
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def domain_ok(self) -> bool:
        return self.hypothesis_ok and self.denominators_ok

    @property
    def agree(self) -> bool | None:
        if not self.denominators_ok:
            return None
        return self.lhs == self.rhs

    @property
    def equal(self) -> bool | None:
        return self.agree if self.domain_ok else None

    @property
    def status(self) -> str:
        if not self.domain_ok:
            return "skip"
        return "pass" if self.equal else "fail"


class _Ctx:
    """Sequence lookups that record vanishing denominators."""

    def __init__(self, params: IdentityParams, side: str):
        self.params = params
        self.side = side
        self.zero: list[Diagnostic] = []
        self._G = seeded_handle(params.seeds)

    def G(self, i: int) -> int:
        return self._G[i]

    def W(self, i: int) -> Fraction:
        return horadam_handle(self.params.horadam)[i]

    def U(self, i: int) -> Fraction:
        return horadam_handle(self.params.horadam.companion())[i]

    def den(self, k: int, *factors: tuple[str, int]) -> Fraction | None:
        """Product of the named sequence values, or None if one is zero."""
        lookup = {"G": self.G, "F": fibonacci, "L": lucas, "W": self.W, "U": self.U}
        prod: Any = 1
        bad = False
        for sym, i in factors:
            v = lookup[sym](i)
            if v == 0:
                self.zero.append((i, f"{sym}_{i} = 0 in {self.side} term k={k}"))
                bad = True
            prod *= v
        return None if bad else prod


def _pm(e: int) -> int:
    """(-1)**e for any integer e."""
    return -1 if e % 2 else 1


def _spow(s: int, e: int) -> int:
    return 1 if s == 1 else _pm(e)


# -- sides of the symmetric identities --------------------------------------
# Each takes (ctx, params, m, N): m is the shift parameter, N the count
# parameter; the left side uses (q, n), the right side (n, q).


def _good(ctx, P, m, N):
    total = Fraction(0)
    for k in range(1, N + 1):
        d = ctx.den(k, ("G", k), ("G", k + m))
        if d is not None:
            total += Fraction(_pm(k), d)
    return fibonacci(m) * total


def _main(ctx, P, m, N):
    p = P.p
    total = Fraction(0)
    for k in range(1, N + 1):
        d = ctx.den(k, ("G", p * k), ("G", p * k + p * m))
        if d is not None:
            total += Fraction(_pm(p * k), d)
    return fibonacci(p * m) * total


def _even_pm(ctx, P, m, N):
    p = P.p
    total = Fraction(0)
    for k in range(1, N + 1):
        d = ctx.den(k, ("G", p * k), ("G", p * k + p * m))
        if d is not None:
            total += Fraction(_spow(P.sign, k * (p - 1)), d)
    return fibonacci(p * m) * total


def _first_power(coef: str, weight: str, doubled: bool, step: int):
    """sum of weight(k) * G_{step*p*k + p*m + t} times F_{pm} or L_{pm}."""

    def side(ctx, P, m, N):
        p, t = P.p, P.t
        count = 2 * N if doubled else N
        total = 0
        for k in range(1, count + 1):
            if weight == "sign":
                w = _spow(P.sign, k - 1)
            elif weight == "alt":
                w = _pm(k - 1)
            else:
                w = 1
            total += w * ctx.G(step * p * k + p * m + t)
        c = fibonacci(p * m) if coef == "F" else lucas(p * m)
        return c * total

    return side


def _lucas_reciprocal(weight: str, doubled: bool, step: int):
    """L_{pm} * sum weight(k) G_{jk+pm+t} / (G_{jk+t} G_{jk+2pm+t}), j = step*p."""

    def side(ctx, P, m, N):
        p, t = P.p, P.t
        j = step * p
        count = 2 * N if doubled else N
        total = Fraction(0)
        for k in range(1, count + 1):
            if weight == "sign":
                w = _spow(P.sign, k - 1)
            elif weight == "alt":
                w = _pm(k - 1)
            else:
                w = 1
            d = ctx.den(k, ("G", j * k + t), ("G", j * k + 2 * p * m + t))
            if d is not None:
                total += Fraction(w * ctx.G(j * k + p * m + t), d)
        return lucas(p * m) * total

    return side


def _fib_reciprocal(alternating: bool):
    """F_{pm} * sum w(k) G_{2pk+pm+t} / (F_pk G_{pk+t} F_{pk+pm} G_{pk+pm+t})."""

    def side(ctx, P, m, N):
        p, t = P.p, P.t
        total = Fraction(0)
        for k in range(1, N + 1):
            w = _pm(k - 1) if alternating else 1
            d = ctx.den(
                k,
                ("F", p * k),
                ("G", p * k + t),
                ("F", p * k + p * m),
                ("G", p * k + p * m + t),
            )
            if d is not None:
                total += Fraction(w * ctx.G(2 * p * k + p * m + t), d)
        return fibonacci(p * m) * total

    return side


def _horadam(even: bool):
    """U_{pm} * sum w(k) / (W_pk W_{pk+pm}), w = Q^{pk} or (sign*Q^p)^k."""

    def side(ctx, P, m, N):
        p = P.p
        Q = Fraction(P.horadam.Q)
        total = Fraction(0)
        for k in range(1, N + 1):
            w = Q ** (p * k)
            if even:
                w *= _spow(P.sign, k)
            d = ctx.den(k, ("W", p * k), ("W", p * k + p * m))
            if d is not None:
                total += w / d
        return ctx.U(p * m) * total

    return side


# -- non-symmetric entries ---------------------------------------------------


def _howard_sides(ctx_l, ctx_r, P):
    a, b, c = P.a, P.b, P.c
    lhs = fibonacci(a) * ctx_l.G(2 * b + a + c)
    first = fibonacci(a + b) * ctx_r.G(a + b + c)
    second = fibonacci(b) * ctx_r.G(b + c)
    rhs = first - second if a % 2 == 0 else first + second
    return lhs, rhs


def _vajda10a_sides(ctx_l, ctx_r, P):
    a, b = P.a, P.b
    lhs = lucas(a) * ctx_l.G(b)
    rhs = ctx_r.G(b + a) + ctx_r.G(b - a) if a % 2 == 0 else ctx_r.G(b + a) - ctx_r.G(b - a)
    return lhs, rhs


def _vajda21_sides(ctx_l, ctx_r, P):
    a, b = P.a, P.b
    lhs = fibonacci(b) * ctx_l.G(a) - fibonacci(a) * ctx_l.G(b)
    rhs = _pm(a) * P.seeds.g0 * fibonacci(b - a)
    return lhs, rhs


def _jeannin_sides(ctx_l, ctx_r, P):
    """beta^{pk}/W_pk - beta^{pk+pq}/W_{pk+pq} against A Q^{pk} U_pq / (W_pk W_{pk+pq})."""
    H = P.horadam
    i, j = P.p * P.k, P.p * P.k + P.p * P.q
    _, beta = alpha_beta(H)
    A, _ = binet_coefficients(H)
    lhs = rhs = None
    wi, wj = ctx_l.den(P.k, ("W", i)), ctx_l.den(P.k, ("W", j))
    if wi is not None and wj is not None:
        lhs = beta**i / wi - beta**j / wj
    d = ctx_r.den(P.k, ("W", i), ("W", j))
    if d is not None:
        rhs = A * Fraction(H.Q) ** i * ctx_r.U(P.q * P.p) / d
    return lhs, rhs


# -- hypotheses --------------------------------------------------------------

Predicate = Callable[[IdentityParams], Optional[str]]


def _odd(x: int) -> bool:
    return x % 2 == 1


def _even(x: int) -> bool:
    return x % 2 == 0


def _nonneg_qn(P: IdentityParams) -> str | None:
    if P.q < 0 or P.n < 0:
        return "q and n must be nonnegative"
    return None


def _positive_pqnt(P: IdentityParams) -> str | None:
    if min(P.p, P.q, P.n, P.t) < 1:
        return "p, q, n and t must be positive"
    return None


def _all(*checks: Predicate) -> Predicate:
    def pred(P: IdentityParams) -> str | None:
        for check in checks:
            msg = check(P)
            if msg:
                return msg
        return None

    return pred


def _require(cond: Callable[[IdentityParams], bool], msg: str) -> Predicate:
    return lambda P: None if cond(P) else msg


def _no_hypothesis(P: IdentityParams) -> str | None:
    return None


_p_nonzero = _require(lambda P: P.p != 0, "p must be nonzero")
_qn_even = _require(lambda P: _even(P.q) and _even(P.n), "q and n must be even")
_pqn_odd = _require(lambda P: _odd(P.p * P.q * P.n), "pqn must be odd")

_HYPOTHESES: dict[IdentityId, Predicate] = {
    IdentityId.GoodEq1: _nonneg_qn,
    IdentityId.MainEq2: _all(_nonneg_qn, _p_nonzero),
    IdentityId.ThmEvenPM: _all(_nonneg_qn, _qn_even, _p_nonzero),
    IdentityId.T1a: _all(_nonneg_qn, _pqn_odd),
    IdentityId.T1b: _all(_nonneg_qn, _pqn_odd),
    IdentityId.TX: _all(
        _nonneg_qn,
        _require(
            lambda P: _odd(P.p * P.q * P.n) or (_even(P.q) and _even(P.n)),
            "pqn must be odd or q and n must be even",
        ),
    ),
    IdentityId.T5: _all(
        _nonneg_qn,
        _require(
            lambda P: _even(P.p) or (_even(P.q) and _even(P.n)),
            "p must be even or q and n must be even",
        ),
    ),
    IdentityId.T9: _all(_nonneg_qn, _require(lambda P: _even(P.p), "p must be even")),
    IdentityId.T8: _all(
        _nonneg_qn,
        _require(lambda P: _even(P.p) and _odd(P.n * P.q), "p must be even and nq odd"),
    ),
    IdentityId.R1a: _all(_positive_pqnt, _pqn_odd),
    IdentityId.R1b: _all(_positive_pqnt, _pqn_odd),
    IdentityId.R2: _all(
        _positive_pqnt,
        _require(lambda P: _even(P.p) and _odd(P.n * P.q), "p must be even and nq odd"),
    ),
    IdentityId.R3: _all(
        _positive_pqnt,
        _require(
            lambda P: _even(P.p) or (_even(P.n) and _even(P.q)),
            "p must be even or n and q must be even",
        ),
    ),
    IdentityId.R4: _all(
        _positive_pqnt,
        _require(
            lambda P: _odd(P.p) or (_even(P.n) and _even(P.q)),
            "p must be odd or n and q must be even",
        ),
    ),
    IdentityId.HorW: _all(_nonneg_qn, _p_nonzero),
    IdentityId.HorWEven: _all(_nonneg_qn, _qn_even, _p_nonzero),
    IdentityId.HowardCor35: _no_hypothesis,
    IdentityId.Vajda10a: _no_hypothesis,
    IdentityId.Vajda21: _no_hypothesis,
    IdentityId.Jeannin41: _require(
        lambda P: P.p * P.k >= 0 and P.p * P.k + P.p * P.q >= 0,
        "pk and pk+pq must be nonnegative",
    ),
}

# -- the catalog -------------------------------------------------------------

_SYM_FIELDS = ("seeds", "p", "q", "n")
_SYM_T_FIELDS = ("seeds", "p", "q", "n", "t")


@dataclass(frozen=True)
class Identity:
    id: IdentityId
    title: str
    statement: str
    hypothesis: str
    fields: tuple[str, ...]
    degree: int  # sides scale by m**degree when the seeds are scaled by m
    side: Callable | None = None
    sides: Callable | None = None
    doubled: bool = False  # summation runs to 2n / 2q

    @property
    def name(self) -> str:
        return self.id.value

    @property
    def symmetric(self) -> bool:
        return self.side is not None

    def as_dict(self) -> dict:
        return {
            "id": self.id.name,
            "name": self.name,
            "title": self.title,
            "statement": self.statement,
            "hypothesis": self.hypothesis,
            "parameters": list(self.fields),
        }


def _entry(id, title, statement, hypothesis, fields, degree, side=None, sides=None,
           doubled=False):
    return Identity(id, title, statement, hypothesis, fields, degree, side, sides, doubled)


_SIGN = ("sign",)

CATALOG: dict[IdentityId, Identity] = {
    e.id: e
    for e in [
        _entry(
            IdentityId.GoodEq1,
            "Good's symmetry identity",
            "F_q sum_{k=1}^{n} (-1)^k/(G_k G_{k+q}) = F_n sum_{k=1}^{q} (-1)^k/(G_k G_{k+n})",
            "q, n >= 0; every denominator nonzero",
            ("seeds", "q", "n"),
            -2,
            side=_good,
        ),
        _entry(
            IdentityId.MainEq2,
            "Reciprocal product sum, step p",
            "F_pq sum_{k=1}^{n} (-1)^(pk)/(G_pk G_{pk+pq}) = F_pn sum_{k=1}^{q} (-1)^(pk)/(G_pk G_{pk+pn})",
            "q, n >= 0; p != 0; every denominator nonzero",
            _SYM_FIELDS,
            -2,
            side=_main,
        ),
        _entry(
            IdentityId.ThmEvenPM,
            "Reciprocal product sum with (+-1)^(k(p-1)) weights",
            "F_pq sum_{k=1}^{n} (+-1)^(k(p-1))/(G_pk G_{pk+pq}) = F_pn sum_{k=1}^{q} (+-1)^(k(p-1))/(G_pk G_{pk+pn})",
            "q, n even and >= 0; p != 0",
            _SYM_FIELDS + _SIGN,
            -2,
            side=_even_pm,
        ),
        _entry(
            IdentityId.T1a,
            "Lucas-weighted alternating first-power sum",
            "L_pq sum_{k=1}^{2n} (+-1)^(k-1) G_{pk+pq+t} = L_pn sum_{k=1}^{2q} (+-1)^(k-1) G_{pk+pn+t}",
            "pqn odd",
            _SYM_T_FIELDS + _SIGN,
            1,
            side=_first_power("L", "sign", True, 1),
            doubled=True,
        ),
        _entry(
            IdentityId.T1b,
            "Lucas-weighted first-power sum, step 2p",
            "L_pq sum_{k=1}^{n} G_{2pk+pq+t} = L_pn sum_{k=1}^{q} G_{2pk+pn+t}",
            "pqn odd",
            _SYM_T_FIELDS,
            1,
            side=_first_power("L", "one", False, 2),
        ),
        _entry(
            IdentityId.TX,
            "Fibonacci-weighted alternating first-power sum, step 2p",
            "F_pq sum_{k=1}^{n} (-1)^(k-1) G_{2pk+pq+t} = F_pn sum_{k=1}^{q} (-1)^(k-1) G_{2pk+pn+t}",
            "pqn odd, or q and n even",
            _SYM_T_FIELDS,
            1,
            side=_first_power("F", "alt", False, 2),
        ),
        _entry(
            IdentityId.T5,
            "Fibonacci-weighted first-power sum, step 2p",
            "F_pq sum_{k=1}^{n} G_{2pk+pq+t} = F_pn sum_{k=1}^{q} G_{2pk+pn+t}",
            "p even, or q and n even",
            _SYM_T_FIELDS,
            1,
            side=_first_power("F", "one", False, 2),
        ),
        _entry(
            IdentityId.T9,
            "Fibonacci-weighted (+-1) first-power sum",
            "F_pq sum_{k=1}^{2n} (+-1)^(k-1) G_{pk+pq+t} = F_pn sum_{k=1}^{2q} (+-1)^(k-1) G_{pk+pn+t}",
            "p even",
            _SYM_T_FIELDS + _SIGN,
            1,
            side=_first_power("F", "sign", True, 1),
            doubled=True,
        ),
        _entry(
            IdentityId.T8,
            "Lucas-weighted alternating first-power sum, step 2p",
            "L_pq sum_{k=1}^{n} (-1)^(k-1) G_{2pk+pq+t} = L_pn sum_{k=1}^{q} (-1)^(k-1) G_{2pk+pn+t}",
            "p even and nq odd",
            _SYM_T_FIELDS,
            1,
            side=_first_power("L", "alt", False, 2),
        ),
        _entry(
            IdentityId.R1a,
            "Lucas-weighted (+-1) reciprocal sum",
            "L_pq sum_{k=1}^{2n} (+-1)^(k-1) G_{pk+pq+t}/(G_{pk+t} G_{pk+2pq+t}) = (q <-> n)",
            "p, q, n, t positive; pnq odd",
            _SYM_T_FIELDS + _SIGN,
            -1,
            side=_lucas_reciprocal("sign", True, 1),
            doubled=True,
        ),
        _entry(
            IdentityId.R1b,
            "Lucas-weighted reciprocal sum, step 2p",
            "L_pq sum_{k=1}^{n} G_{2pk+pq+t}/(G_{2pk+t} G_{2pk+2pq+t}) = (q <-> n)",
            "p, q, n, t positive; pnq odd",
            _SYM_T_FIELDS,
            -1,
            side=_lucas_reciprocal("one", False, 2),
        ),
        _entry(
            IdentityId.R2,
            "Lucas-weighted alternating reciprocal sum, step 2p",
            "L_pq sum_{k=1}^{n} (-1)^(k-1) G_{2pk+pq+t}/(G_{2pk+t} G_{2pk+2pq+t}) = (q <-> n)",
            "p, q, n, t positive; p even and nq odd",
            _SYM_T_FIELDS,
            -1,
            side=_lucas_reciprocal("alt", False, 2),
        ),
        _entry(
            IdentityId.R3,
            "Fibonacci-weighted reciprocal sum",
            "F_pq sum_{k=1}^{n} G_{2pk+pq+t}/(F_pk G_{pk+t} F_{pk+pq} G_{pk+pq+t}) = (q <-> n)",
            "p, q, n, t positive; p even, or n and q even",
            _SYM_T_FIELDS,
            -1,
            side=_fib_reciprocal(False),
        ),
        _entry(
            IdentityId.R4,
            "Fibonacci-weighted alternating reciprocal sum",
            "F_pq sum_{k=1}^{n} (-1)^(k-1) G_{2pk+pq+t}/(F_pk G_{pk+t} F_{pk+pq} G_{pk+pq+t}) = (q <-> n)",
            "p, q, n, t positive; p odd, or n and q even",
            _SYM_T_FIELDS,
            -1,
            side=_fib_reciprocal(True),
        ),
        _entry(
            IdentityId.HowardCor35,
            "Product of a Fibonacci and a Fibonacci-type number",
            "F_a G_{2b+a+c} = F_{a+b} G_{a+b+c} - F_b G_{b+c} (a even), + (a odd)",
            "none",
            ("seeds", "a", "b", "c"),
            1,
            sides=_howard_sides,
        ),
        _entry(
            IdentityId.Vajda10a,
            "Product of a Lucas and a Fibonacci-type number",
            "L_a G_b = G_{b+a} + G_{b-a} (a even), G_{b+a} - G_{b-a} (a odd)",
            "none",
            ("seeds", "a", "b"),
            1,
            sides=_vajda10a_sides,
        ),
        _entry(
            IdentityId.Vajda21,
            "Cross difference of Fibonacci and Fibonacci-type products",
            "F_b G_a - F_a G_b = (-1)^a G_0 F_{b-a}",
            "none",
            ("seeds", "a", "b"),
            1,
            sides=_vajda21_sides,
        ),
        _entry(
            IdentityId.Jeannin41,
            "Reciprocal difference for Horadam sequences",
            "beta^(pk)/W_pk - beta^(pk+pq)/W_{pk+pq} = A Q^(pk) U_pq/(W_pk W_{pk+pq}), A = b - beta a",
            "pk >= 0 and pk+pq >= 0; W_pk, W_{pk+pq} nonzero",
            ("horadam", "p", "q", "k"),
            -1,
            sides=_jeannin_sides,
        ),
        _entry(
            IdentityId.HorW,
            "Horadam reciprocal product sum",
            "U_pq sum_{k=1}^{n} Q^(pk)/(W_pk W_{pk+pq}) = U_pn sum_{k=1}^{q} Q^(pk)/(W_pk W_{pk+pn})",
            "q, n >= 0; p != 0",
            ("horadam", "p", "q", "n"),
            -2,
            side=_horadam(False),
        ),
        _entry(
            IdentityId.HorWEven,
            "Horadam reciprocal product sum with (+-Q^p)^k weights",
            "U_pq sum_{k=1}^{n} (+-Q^p)^k/(W_pk W_{pk+pq}) = U_pn sum_{k=1}^{q} (+-Q^p)^k/(W_pk W_{pk+pn})",
            "q, n even and >= 0; p != 0",
            ("horadam", "p", "q", "n", "sign"),
            -2,
            side=_horadam(True),
        ),
    ]
}


def catalog() -> list[Identity]:
    return list(CATALOG.values())


def hypothesis_violation(id: IdentityId, params: IdentityParams) -> str | None:
    return _HYPOTHESES[id](params)


def _dedupe(diags: list[Diagnostic]) -> list[Diagnostic]:
    seen: set = set()
    out = []
    for d in diags:
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def eval_sides(id: IdentityId, params: IdentityParams) -> CheckResult:
    """Evaluate both sides by direct summation and judge the identity."""
    entry = CATALOG[id]
    if id is IdentityId.GoodEq1:
        params = replace(params, p=1)
    violation = hypothesis_violation(id, params)
    ctx_l, ctx_r = _Ctx(params, "lhs"), _Ctx(params, "rhs")
    if entry.symmetric:
        lhs = entry.side(ctx_l, params, params.q, params.n)
        rhs = entry.side(ctx_r, params, params.n, params.q)
    else:
        lhs, rhs = entry.sides(ctx_l, ctx_r, params)
    diags: list[Diagnostic] = []
    if violation:
        diags.append((None, violation))
    zero = ctx_l.zero + ctx_r.zero
    diags.extend(_dedupe(zero))
    ok = not zero
    return CheckResult(
        lhs=_plain(lhs) if ok else None,
        rhs=_plain(rhs) if ok else None,
        hypothesis_ok=violation is None,
        denominators_ok=ok,
        diagnostics=diags,
    )


def _plain(x: Any) -> Any:
    if isinstance(x, int):
        return Fraction(x)
    return x


def check_lemma_howard(a: int, b: int, c: int, seeds: SeedPair) -> CheckResult:
    return eval_sides(IdentityId.HowardCor35, IdentityParams(a=a, b=b, c=c, seeds=seeds))


def check_lemma_vajda10a(a: int, b: int, seeds: SeedPair) -> CheckResult:
    return eval_sides(IdentityId.Vajda10a, IdentityParams(a=a, b=b, seeds=seeds))


def check_lemma_vajda21(a: int, b: int, seeds: SeedPair) -> CheckResult:
    return eval_sides(IdentityId.Vajda21, IdentityParams(a=a, b=b, seeds=seeds))


def check_jeannin41(params: HoradamParams, p: int, q: int, k: int) -> CheckResult:
    return eval_sides(IdentityId.Jeannin41, IdentityParams(horadam=params, p=p, q=q, k=k))


# -- telescoping re-derivation ----------------------------------------------


def _ratio_sequence(seeds: SeedPair) -> tuple[AbstractSequence, int]:
    """f with f(b) - f(a) = (-1)^a c F_{b-a} / (G_a G_b), and that constant c.

    f(k) = F_k/G_k gives c = G_0; when G_0 = 0 the companion
    f(k) = -F_{k-1}/G_k gives c = G_1 instead.
    """
    G = seeded_handle(seeds)
    if seeds.g0 != 0:
        return AbstractSequence(lambda k: Fraction(fibonacci(k), G[k]), "F_k/G_k"), seeds.g0
    return AbstractSequence(lambda k: Fraction(-fibonacci(k - 1), G[k]), "-F_(k-1)/G_k"), seeds.g1


def _scaled(sides, factor) -> tuple[Any, Any]:
    return _plain_quad(sides.lhs / factor), _plain_quad(sides.rhs / factor)


def _plain_quad(x: Any) -> Any:
    if isinstance(x, QuadElem) and x.is_rational:
        return x.rational
    return _plain(x)


def _seq(fn: Callable[[int], Any], name: str) -> AbstractSequence:
    return AbstractSequence(fn, name)


def rederive(id: IdentityId, params: IdentityParams) -> tuple[Any, Any] | None:
    """Both sides of ``id`` recomputed through a telescoping lemma.

    Returns None when the entry has no telescoping derivation or the lemma's
    positivity requirements on the step sizes are not met.
    """
    P = params
    p, q, n, t, s = P.p, P.q, P.n, P.t, P.sign
    G = seeded_handle(P.seeds)
    if id is IdentityId.GoodEq1:
        p = 1
    if id in _NO_DERIVATION or p < 1 or q < 1 or n < 1:
        return None
    if hypothesis_violation(id, replace(P, p=p)):
        return None
    try:
        if id in (IdentityId.GoodEq1, IdentityId.MainEq2):
            f, c = _ratio_sequence(P.seeds)
            return _scaled(telescope_fs(f, p, q, n), c) if c else None
        if id is IdentityId.ThmEvenPM:
            f, c = _ratio_sequence(P.seeds)
            s_lemma = _pm(p) * _spow(s, p - 1)
            return _scaled(telescope_fs1(f, p, q, n, s_lemma), c * s_lemma) if c else None
        shift_g = _seq(lambda k: Fraction(G[k + t]), "G_(k+t)")
        fg = _seq(lambda k: Fraction(fibonacci(k) * G[k + t]), "F_k G_(k+t)")
        recip_g = _seq(lambda k: Fraction(1, G[k + t]), "1/G_(k+t)")
        recip_fg = _seq(lambda k: Fraction(1, fibonacci(k) * G[k + t]), "1/(F_k G_(k+t))")
        if id is IdentityId.T1a:
            return _scaled(telescope_fs1(shift_g, p, 2 * q, 2 * n, s), 1)
        if id is IdentityId.T1b:
            return _scaled(telescope_fs(shift_g, 2 * p, q, n), 1)
        if id is IdentityId.TX:
            if _odd(p * q * n):
                return _scaled(telescope_fs2(fg, p, q, n), 1)
            return _scaled(telescope_fs1(fg, p, q, n, -1), 1)
        if id is IdentityId.T5:
            return _scaled(telescope_fs(fg, p, q, n), 1)
        if id is IdentityId.T9:
            return _scaled(telescope_fs1(fg, p // 2, 2 * q, 2 * n, s), 1)
        if id is IdentityId.T8:
            return _scaled(telescope_fs2(shift_g, 2 * p, q, n), 1)
        if id is IdentityId.R1a:
            return _scaled(telescope_fs1(recip_g, p, 2 * q, 2 * n, s), -1)
        if id is IdentityId.R1b:
            return _scaled(telescope_fs(recip_g, 2 * p, q, n), -1)
        if id is IdentityId.R2:
            return _scaled(telescope_fs2(recip_g, 2 * p, q, n), 1)
        if id is IdentityId.R3:
            return _scaled(telescope_fs(recip_fg, p, q, n), -1)
        if id in (IdentityId.HorW, IdentityId.HorWEven):
            H = P.horadam
            W = horadam_handle(H)
            alpha, beta = alpha_beta(H)
            A, B = binet_coefficients(H)
            root, coef = (beta, A) if A else (alpha, B)
            if not coef:
                return None
            f = _seq(lambda k: root**k / W[k], "root^k/W_k")
            if id is IdentityId.HorW:
                return _scaled(telescope_fs(f, p, q, n), -coef)
            return _scaled(telescope_fs1(f, p, q, n, s), -coef * s)
    except SequenceEvaluationError:
        return None
    raise AssertionError(f"unhandled identity {id}")


_NO_DERIVATION = {
    IdentityId.R4,
    IdentityId.HowardCor35,
    IdentityId.Vajda10a,
    IdentityId.Vajda21,
    IdentityId.Jeannin41,
}


def cross_check(id: IdentityId, params: IdentityParams) -> bool | None:
    """Whether the telescoping route reproduces the direct sums; None if not applicable."""
    direct = eval_sides(id, params)
    if not direct.denominators_ok:
        return None
    other = rederive(id, params)
    if other is None:
        return None
    return (direct.lhs, direct.rhs) == other


# -- finite form versus the infinite series ----------------------------------


@dataclass(frozen=True)
class ConsistencyReport:
    p: int
    q: int
    n: int
    finite_form: Fraction
    partial_sum: Fraction
    closed: QuadElem
    discrepancy: QuadElem
    discrepancy_interval: tuple[Fraction, Fraction]

    @property
    def identity_holds(self) -> bool:
        return self.finite_form == self.partial_sum


def _abs_enclosure(x: QuadElem) -> tuple[Fraction, Fraction]:
    if not x:
        return Fraction(0), Fraction(0)
    bits = 64
    while True:
        lo, hi = qf_to_interval(x, bits)
        if lo > 0 or hi < 0:
            lo, hi = (lo, hi) if lo > 0 else (-hi, -lo)
            # stop once the enclosure is within a factor 2^-32 relative
            if (hi - lo) * (1 << 32) <= lo:
                return lo, hi
        bits *= 2


def limit_consistency(p: int, q: int, n_max: int) -> ConsistencyReport:
    """Distance between the finite form at n = n_max and the series limit.

    The finite form is (F_pn / F_pq) sum_{k=1..q} (-1)^{pk} / (F_pk F_{pk+pn}),
    which equals the n-th partial sum of the series.
    """
    if p < 1 or q < 1 or n_max < 1:
        raise ValueError("p, q and n_max must be >= 1")
    n = n_max
    total = Fraction(0)
    for k in range(1, q + 1):
        total += Fraction(_pm(p * k), fibonacci(p * k) * fibonacci(p * k + p * n))
    finite = Fraction(fibonacci(p * n), fibonacci(p * q)) * total
    spec = SeriesSpec(p, q)
    closed = closed_form(spec)
    disc = closed - finite
    return ConsistencyReport(
        p, q, n, finite, partial_sum(spec, n), closed, disc, _abs_enclosure(disc)
    )


IDENTITY_NAMES = [member.value for member in IdentityId]

__all__ = [
    "CATALOG",
    "CheckResult",
    "ConsistencyReport",
    "Identity",
    "IdentityId",
    "IdentityParams",
    "catalog",
    "check_jeannin41",
    "check_lemma_howard",
    "check_lemma_vajda10a",
    "check_lemma_vajda21",
    "cross_check",
    "eval_sides",
    "hypothesis_violation",
    "limit_consistency",
    "rederive",
]


"""Command-line front end: ``fibsym {seq,check,sweep,series,list}``.

Exit codes: 0 ok, 1 usage, 2 identity failed inside its hypothesis,
3 hypothesis or denominator violation, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .identities import (
    CATALOG,
    IdentityId,
    IdentityParams,
    catalog,
    eval_sides,
)
from .render import decimal_of, render_value
from .sequences import HoradamParams, SeedPair, SequenceHandle
from .series import SeriesSpec, estimate_at, evaluate
from .sweep import Grid, sweep

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- argument value parsers ----------------------------------------------------


def _ints(text: str, count: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    if len(values) != count:
        raise UsageError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    return values


def parse_seeds(text: str) -> SeedPair:
    return SeedPair(*_ints(text, 2, "seeds"))


def parse_horadam(text: str) -> HoradamParams:
    a, b, P, Q = _ints(text, 4, "params")
    try:
        return HoradamParams(a, b, P, Q)
    except ValueError as exc:
        raise UsageError(f"params: {exc}")


def parse_sign(text: str) -> int:
    t = text.strip()
    if t in ("+", "+1", "1"):
        return 1
    if t in ("-", "-1"):
        return -1
    raise UsageError(f"sign must be +1 or -1, got {text!r}")


def parse_range(text: str) -> list[int]:
    """``"a:b"`` (inclusive), ``"a:b:step"``, or a comma list; mixable: ``"0,2:4"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ":" in part:
                bits = [int(x) for x in part.split(":")]
                if len(bits) == 2:
                    lo, hi, step = bits[0], bits[1], 1
                elif len(bits) == 3:
                    lo, hi, step = bits
                else:
                    raise ValueError
                if step <= 0:
                    raise ValueError
                out.extend(range(lo, hi + 1, step))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {text!r}")
    return out


def parse_list(text: str, item) -> list:
    return [item(chunk) for chunk in text.split(";") if chunk.strip()]


# -- output helpers ------------------------------------------------------------


def _document(kind: str, argv: Sequence[str], **body) -> dict:
    return {"schema": SCHEMA_VERSION, "kind": kind, "command": list(argv), **body}


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def _params_dict(id: IdentityId, params: IdentityParams) -> dict:
    out = {}
    for name in CATALOG[id].fields:
        v = getattr(params, name)
        out[name] = f"{v[0]},{v[1]}" if name == "seeds" else (str(v) if name == "horadam" else v)
    return out


# -- subcommands ---------------------------------------------------------------


def cmd_seq(args, argv) -> int:
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    kind = args.kind
    if kind == "fibonacci":
        handle, desc = SequenceHandle.of_fibonacci(), None
    elif kind == "lucas":
        handle, desc = SequenceHandle.of_lucas(), None
    elif kind == "gen":
        seeds = parse_seeds(args.seeds)
        handle, desc = SequenceHandle.of_seeds(seeds), f"{seeds.g0},{seeds.g1}"
    else:
        if args.params is None:
            raise UsageError(f"--params a,b,P,Q is required for --kind {kind}")
        H = parse_horadam(args.params)
        handle = SequenceHandle.of_horadam(H) if kind == "horadam" else SequenceHandle.of_horadam_u(H)
        desc = str(H)
    indices = range(args.start, args.stop + 1)
    values = [render_value(handle[i]) for i in indices]
    if args.json:
        doc = _document(
            "seq", argv, sequence=kind, params=desc, **{"from": args.start, "to": args.stop},
            terms=[{"index": i, "value": v} for i, v in zip(indices, values)],
        )
        sys.stdout.write(_dump(doc))
    else:
        print(",".join(values))
    return EXIT_OK


def _check_params(args) -> IdentityParams:
    return IdentityParams(
        p=args.p, q=args.q, n=args.n, t=args.t,
        seeds=parse_seeds(args.seeds),
        horadam=parse_horadam(args.params),
        sign=parse_sign(args.sign),
        a=args.a, b=args.b, c=args.c, k=args.k,
    )


def cmd_check(args, argv) -> int:
    try:
        id = IdentityId.parse(args.identity)
    except KeyError:
        raise UsageError(f"unknown identity {args.identity!r}; see `list`")
    params = _check_params(args)
    r = eval_sides(id, params)
    if r.domain_ok:
        verdict, code = ("PASS", EXIT_OK) if r.equal else ("FAIL", EXIT_FAIL)
    else:
        verdict, code = "DOMAIN-SKIP", EXIT_DOMAIN
    if args.json:
        doc = _document(
            "check", argv, identity=id.value, params=_params_dict(id, params),
            lhs=render_value(r.lhs), rhs=render_value(r.rhs), verdict=verdict,
            hypothesis_ok=r.hypothesis_ok, denominators_ok=r.denominators_ok,
            diagnostics=[{"index": i, "reason": why} for i, why in r.diagnostics],
        )
        sys.stdout.write(_dump(doc))
    elif r.domain_ok:
        print(f"{id.value}: lhs={render_value(r.lhs)} rhs={render_value(r.rhs)} {verdict}")
    else:
        reasons = "; ".join(why for _, why in r.diagnostics)
        print(f"{id.value}: {verdict} ({reasons})")
    return code


def _grid(args) -> Grid:
    return Grid(
        p=parse_range(args.p), q=parse_range(args.q), n=parse_range(args.n),
        t=parse_range(args.t), k=parse_range(args.k),
        a=parse_range(args.a), b=parse_range(args.b), c=parse_range(args.c),
        seeds=parse_list(args.seeds, parse_seeds),
        sign=[parse_sign(s) for s in args.sign.split(",") if s.strip()],
        horadam=parse_list(args.params, parse_horadam),
    )


def cmd_sweep(args, argv) -> int:
    if args.identity == "all":
        ids = list(IdentityId)
    else:
        try:
            ids = [IdentityId.parse(args.identity)]
        except KeyError:
            raise UsageError(f"unknown identity {args.identity!r}; see `list`")
    grid = _grid(args)
    reports = [sweep(id, grid) for id in ids]
    failed = sum(len(r.counterexamples) for r in reports)
    for r in reports:
        s = r.summary()
        print(
            f"{r.identity.value}: {s['checked']} checked, {s['passed']} passed, "
            f"{s['failed']} failed, {s['domain_skipped']} skipped; "
            f"outside hypothesis {s['outside_hypothesis_agree']} agree, "
            f"{s['outside_hypothesis_disagree']} disagree"
        )
    if args.output:
        totals = {
            key: sum(r.summary()[key] for r in reports)
            for key in ("points", "checked", "passed", "failed", "domain_skipped")
        }
        doc = _document(
            "sweep", argv, summary=totals,
            results=[r.as_dict(include_points=not args.no_points) for r in reports],
        )
        try:
            with open(args.output, "w", encoding="ascii") as fh:
                fh.write(_dump(doc))
        except OSError as exc:
            print(f"fibsym: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_series(args, argv) -> int:
    try:
        spec = SeriesSpec(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.decimals < 0:
        raise UsageError("--decimals must be >= 0")
    if args.n_terms is not None:
        if args.n_terms < 1:
            raise UsageError("--n-terms must be >= 1")
        est = estimate_at(spec, args.n_terms)
    else:
        try:
            radius = Fraction(args.radius)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad radius {args.radius!r}")
        if radius <= 0:
            raise UsageError("--radius must be positive")
        est = evaluate(spec, radius)
    fields = {
        "p": spec.p,
        "q": spec.q,
        "closed_form": render_value(est.closed),
        "n_terms": est.n_terms,
        "partial_sum": render_value(est.partial),
        "radius": render_value(est.tail_radius),
    }
    if args.decimals:
        fields["decimals"] = args.decimals
        fields["closed_form_decimal"] = decimal_of(est.closed, args.decimals)
        fields["partial_sum_decimal"] = decimal_of(est.partial, args.decimals)
    if args.json:
        sys.stdout.write(_dump(_document("series", argv, **fields)))
        return EXIT_OK
    print(f"closed form: {fields['closed_form']}")
    print(f"partial sum ({est.n_terms} terms): {fields['partial_sum']}")
    print(f"certified radius: {fields['radius']}")
    if args.decimals:
        print(f"closed form decimal: {fields['closed_form_decimal']}")
        print(f"partial sum decimal: {fields['partial_sum_decimal']}")
    return EXIT_OK


def cmd_list(args, argv) -> int:
    entries = [e.as_dict() for e in catalog()]
    if args.json:
        sys.stdout.write(_dump(_document("list", argv, identities=entries)))
    else:
        width = max(len(e["name"]) for e in entries)
        for e in entries:
            print(f"{e['name']:<{width}}  {e['statement']}")
            print(f"{'':<{width}}  hypothesis: {e['hypothesis']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print sequence terms")
    p.add_argument("--kind", required=True,
                   choices=["fibonacci", "lucas", "gen", "horadam", "horadam-u"])
    p.add_argument("--seeds", default="0,1", help="G0,G1 for --kind gen")
    p.add_argument("--params", help="a,b,P,Q for Horadam kinds")
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", dest="stop", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("check", help="evaluate one identity instance")
    p.add_argument("identity")
    for name, default in (("p", 1), ("q", 1), ("n", 1), ("t", 0),
                          ("a", 0), ("b", 0), ("c", 0), ("k", 1)):
        p.add_argument(f"--{name}", type=int, default=default)
    p.add_argument("--seeds", default="0,1")
    p.add_argument("--sign", default="+1")
    p.add_argument("--params", default="0,1,1,-1", help="Horadam a,b,P,Q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="check an identity over a parameter grid")
    p.add_argument("identity", help="identity name, or 'all'")
    for name, default in (("p", "1:3"), ("q", "0:5"), ("n", "0:5"), ("t", "0:2"),
                          ("a", "-3:3"), ("b", "-3:3"), ("c", "-2:2"), ("k", "1:3")):
        p.add_argument(f"--{name}", default=default,
                       help="inclusive range a:b[:step] or comma list; "
                            "use --x=-1:3 for negative starts")
    p.add_argument("--seeds", default="0,1;2,1", help="semicolon-separated G0,G1 pairs")
    p.add_argument("--sign", default="+1,-1")
    p.add_argument("--params", default="0,1,1,-1;0,1,3,2",
                   help="semicolon-separated Horadam a,b,P,Q")
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--no-points", action="store_true",
                   help="omit per-point results from the JSON report")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("series", help="evaluate the alternating reciprocal series")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, default=1)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--radius", default="1e-12", help="target certified radius")
    g.add_argument("--n-terms", type=int)
    p.add_argument("--decimals", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("list", help="list the identity catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except UsageError as exc:
        print(f"fibsym {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

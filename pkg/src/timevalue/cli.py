"""Command-line front end.

Exit codes: 0 on success, 2 for usage or domain errors, 3 for numerical
failures (no sign change, non-convergence).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from timevalue import curves, knowledge, money, solver
from timevalue.core import Divergent, Finite, RateKind, make_rate
from timevalue.errors import Inconclusive, NumericalFailure, ValuationError
from timevalue.streamio import read_stream

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class _UsageError(ValuationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _real(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _param(text: str) -> tuple[str, float]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), _real(value)


def _fmt_money(v: float) -> str:
    return f"{v:.7f}"


def _fmt(v: float) -> str:
    return format(v, ".10g")


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_pv(args) -> int:
    _emit(_fmt_money(money.pv_of_fv(args.amount, args.rate, args.periods)) + "\n", args)
    return EXIT_OK


def cmd_fv(args) -> int:
    _emit(_fmt_money(money.fv_of_pv(args.amount, args.rate, args.periods)) + "\n", args)
    return EXIT_OK


def cmd_npv(args) -> int:
    stream = read_stream(args.stream)
    _emit(_fmt_money(money.pv_of_stream(stream, args.rate)) + "\n", args)
    return EXIT_OK


def cmd_irr(args) -> int:
    stream = read_stream(args.stream)
    rate = solver.irr(stream, solver.Bracket(args.lo, args.hi), args.tol)
    _emit(f"{rate.value:.10f}\n", args)
    return EXIT_OK


def cmd_weight(args) -> int:
    _emit(_fmt(knowledge.weight(args.k, args.periods)) + "\n", args)
    return EXIT_OK


def cmd_probe(args) -> int:
    try:
        result = knowledge.limit_probe(args.base, args.k, args.threshold, args.nmax)
    except Inconclusive as exc:
        line = f"INCONCLUSIVE value_at_nmax={_fmt(exc.value_at_n_max)}"
    else:
        if isinstance(result, Divergent):
            line = f"DIVERGENT N={result.certificate.crossing_period}"
        else:
            line = f"FINITE {_fmt(result.value)}"
    _emit(line + "\n", args)
    return EXIT_OK


def _option(token: str, threshold: float, nmax: int):
    if token.lower().startswith("probe:"):
        parts = token.split(":")[1:]
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"expected probe:BASE:K, got {token!r}")
        base, k = _real(parts[0]), _real(parts[1])
        return knowledge.limit_probe(base, make_rate(k, RateKind.KNOWLEDGE), threshold, nmax)
    return Finite(_real(token))


def cmd_select(args) -> int:
    try:
        values = [_option(tok, args.threshold, args.nmax) for tok in args.values]
    except argparse.ArgumentTypeError as exc:
        raise _UsageError(str(exc)) from None
    index = knowledge.indifference_select(values, args.tol, args.seed)
    _emit(f"{index}\n", args)
    return EXIT_OK


def cmd_curve(args) -> int:
    if args.spec is not None:
        if args.params:
            raise _UsageError("--param applies to --figure only")
        text = args.spec
        if not text.lstrip().startswith(("{", "[")):
            try:
                text = Path(text).read_text(encoding="utf-8")
            except OSError as exc:
                raise _UsageError(f"cannot read spec file: {exc}") from None
        series = curves.spec_series(text)
        grid_text = args.range or "0:30:301"
    else:
        series = curves.figure_series(args.figure, dict(args.params))
        grid_text = args.range or curves.FIGURE_RANGES[args.figure]
    table = curves.tabulate(series, curves.grid(*curves.parse_range(grid_text)))
    _emit(table.to_svg() if args.format == "svg" else table.to_csv(), args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--format", choices=("csv", "svg"), default="csv", help="curve output format")

    parser = _Parser(prog="timevalue", description="Time value of money and knowledge.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext in (
        ("pv", cmd_pv, "present value of an amount received after some periods"),
        ("fv", cmd_fv, "future value of an amount held today"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--amount", type=_real, required=True)
        p.add_argument("--rate", type=_real, required=True)
        p.add_argument("--periods", type=_real, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("npv", parents=[common], help="present value of a cash-flow stream file")
    p.add_argument("--stream", required=True, metavar="FILE")
    p.add_argument("--rate", type=_real, required=True)
    p.set_defaults(func=cmd_npv)

    p = sub.add_parser("irr", parents=[common], help="internal rate of return of a stream file")
    p.add_argument("--stream", required=True, metavar="FILE")
    p.add_argument("--lo", type=_real, default=solver.DEFAULT_BRACKET.lo)
    p.add_argument("--hi", type=_real, default=solver.DEFAULT_BRACKET.hi)
    p.add_argument("--tol", type=_real, default=solver.IRR_TOL)
    p.set_defaults(func=cmd_irr)

    p = sub.add_parser("weight", parents=[common], help="knowledge weight (1+k)^n")
    p.add_argument("--k", type=_real, required=True)
    p.add_argument("--periods", type=_real, required=True)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("probe", parents=[common], help="certify divergence of base*(1+k)^n")
    p.add_argument("--base", type=_real, default=1.0)
    p.add_argument("--k", type=_real, required=True)
    p.add_argument("--threshold", type=_real, default=1e6)
    p.add_argument("--nmax", type=int, default=10_000)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser(
        "select",
        parents=[common],
        help="pick at random among the most valuable options",
        description="Each VALUE is a number (finite value) or probe:BASE:K "
        "(a knowledge value compounding at rate K, probed for divergence).",
    )
    p.add_argument("values", nargs="+", metavar="VALUE")
    p.add_argument("--tol", type=_real, default=knowledge.DEFAULT_INDIFFERENCE_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threshold", type=_real, default=1e6, help="probe threshold")
    p.add_argument("--nmax", type=int, default=1_000_000, help="probe period budget")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("curve", parents=[common], help="tabulate a standard figure or a profile spec")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--figure", type=int, choices=range(1, 8))
    src.add_argument("--spec", metavar="JSON", help="inline JSON profile spec or a path to one")
    p.add_argument("--range", metavar="A:B:STEPS", help="sampling grid")
    p.add_argument(
        "--param",
        dest="params",
        type=_param,
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a figure default, e.g. rate=0",
    )
    p.set_defaults(func=cmd_curve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NumericalFailure as exc:
        print(f"timevalue {args.command}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValuationError, OSError) as exc:
        print(f"timevalue {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

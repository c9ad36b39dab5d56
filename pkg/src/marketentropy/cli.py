"""Command-line surface.

Five subcommands over one strict CSV input file:

  volatility   per-step series (simple, log, or normalized)
  compute      one macrostate report for one instrument
  rank         risk scale over every instrument in the file
  compare      one emitter across venues, via --labels sym@market,...
  precinct     3D point cloud for plotting

All output is buffered and written to stdout only on success, so a failed
run never leaves partial output behind. Exit codes: 0 success, 1 data
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import datetime
import sys
from typing import Sequence

from .errors import AmbiguousInstrumentError, MarketDataError, UnknownInstrumentError
from .indicators import (
    StepKind,
    log_volatility,
    normalized_volatility,
    simple_volatility,
)
from .ingest import Dataset, DateWindow, parse_dataset, slice_window
from .macrostate import AggregationMode, macrostate_report
from .model import ActivityMode, InstrumentSeries
from .ranking import PrecinctAxes, compare_markets, precinct_points, risk_scale
from .report import OutputFormat, render


class _UsageError(Exception):
    """Bad flag combination detected after argparse; exits with code 2."""


def _iso_date(text: str) -> datetime.date:
    try:
        return datetime.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a YYYY-MM-DD date: {text!r}")


def _positive_decimal(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0.0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text}")
    return value


def _label_list(text: str) -> list[str]:
    labels = text.split(",")
    for label in labels:
        if not label:
            raise argparse.ArgumentTypeError("empty label in list")
        if label.count("@") > 1:
            raise argparse.ArgumentTypeError(f"label has more than one '@': {label!r}")
    return labels


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="marketentropy",
        description="Entropy-style risk indicators over daily price/volume series.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="CSV input file")
    common.add_argument(
        "--from",
        dest="from_date",
        type=_iso_date,
        default=None,
        metavar="YYYY-MM-DD",
        help="window start, inclusive",
    )
    common.add_argument(
        "--to",
        dest="to_date",
        type=_iso_date,
        default=None,
        metavar="YYYY-MM-DD",
        help="window end, inclusive",
    )
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=None,
        help="output format (default: json for compute, csv otherwise)",
    )
    common.add_argument(
        "--sort-dates",
        action="store_true",
        help="sort bars by date instead of requiring presorted input",
    )

    instrument = argparse.ArgumentParser(add_help=False)
    instrument.add_argument("--symbol", required=True, metavar="S", help="instrument symbol")
    instrument.add_argument(
        "--market",
        default=None,
        metavar="M",
        help="market/venue (required only when the symbol trades on several)",
    )

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument(
        "--mode",
        choices=[m.value for m in ActivityMode],
        default=ActivityMode.PRICE_TIMES_VOLUME.value,
        help="activity definition (default: pv, price times volume)",
    )

    agg = argparse.ArgumentParser(add_help=False)
    agg.add_argument(
        "--agg",
        choices=[a.value for a in AggregationMode],
        default=AggregationMode.SIGNED.value,
        help="volatility aggregation (default: signed)",
    )
    agg.add_argument(
        "--kb",
        type=_positive_decimal,
        default=None,
        metavar="X",
        help="market-specific constant multiplying the macrostate parameter",
    )

    p_vol = sub.add_parser(
        "volatility",
        parents=[common, instrument, mode],
        help="per-step volatility series for one instrument",
    )
    p_vol.add_argument(
        "--kind",
        choices=[k.value for k in StepKind],
        default=StepKind.NORMALIZED.value,
        help="series kind (default: normalized)",
    )
    p_vol.set_defaults(handler=_cmd_volatility)

    p_compute = sub.add_parser(
        "compute",
        parents=[common, instrument, mode, agg],
        help="macrostate report (P_M, S_e, ln W_B, T_B) for one instrument",
    )
    p_compute.set_defaults(handler=_cmd_compute)

    p_rank = sub.add_parser(
        "rank",
        parents=[common, mode, agg],
        help="risk scale over every instrument in the input",
    )
    p_rank.set_defaults(handler=_cmd_rank)

    p_compare = sub.add_parser(
        "compare",
        parents=[common, mode, agg],
        help="side-by-side reports for one emitter across venues",
    )
    p_compare.add_argument(
        "--labels",
        required=True,
        type=_label_list,
        metavar="L1,L2,...",
        help="comma-separated instruments, each SYMBOL or SYMBOL@MARKET",
    )
    p_compare.set_defaults(handler=_cmd_compare)

    p_precinct = sub.add_parser(
        "precinct",
        parents=[common, instrument, mode],
        help="3D precinct point cloud for one instrument",
    )
    p_precinct.add_argument(
        "--axes",
        choices=[a.value for a in PrecinctAxes],
        default=PrecinctAxes.PRICE_VOLUME_VOLNORM.value,
        help="pvz: price/volume/normalized step; tvz: index/close/simple step",
    )
    p_precinct.set_defaults(handler=_cmd_precinct)

    return parser


def _window(args: argparse.Namespace) -> DateWindow:
    start, end = args.from_date, args.to_date
    if start is not None and end is not None and start > end:
        raise _UsageError(f"--from {start} is after --to {end}")
    return DateWindow(start, end)


def _output_format(args: argparse.Namespace) -> OutputFormat | None:
    return None if args.format is None else OutputFormat(args.format)


def _load(args: argparse.Namespace) -> Dataset:
    with open(args.input, "r", encoding="utf-8", newline="") as handle:
        text = handle.read()
    return parse_dataset(text, sort_dates=args.sort_dates)


def _resolve(dataset: Dataset, symbol: str, market: str | None) -> InstrumentSeries:
    if market is not None:
        series = dataset.get(symbol, market)
        if series is None:
            raise UnknownInstrumentError(
                f"no series for {symbol}@{market} in the input",
                symbol=symbol,
                market=market,
            )
        return series
    matches = dataset.find_symbol(symbol)
    if not matches:
        raise UnknownInstrumentError(f"no series for symbol {symbol}", symbol=symbol)
    if len(matches) > 1:
        raise AmbiguousInstrumentError(
            f"symbol {symbol} trades on several markets, pass --market",
            symbol=symbol,
            markets=",".join(s.market for s in matches),
        )
    return matches[0]


def _cmd_volatility(args: argparse.Namespace) -> str:
    dataset = _load(args)
    series = slice_window(_resolve(dataset, args.symbol, args.market), _window(args))
    kind = StepKind(args.kind)
    if kind is StepKind.SIMPLE:
        result = simple_volatility(series)
    elif kind is StepKind.LOG:
        result = log_volatility(series)
    else:
        result = normalized_volatility(series, ActivityMode(args.mode))
    return render(result, _output_format(args))


def _cmd_compute(args: argparse.Namespace) -> str:
    dataset = _load(args)
    series = _resolve(dataset, args.symbol, args.market)
    report = macrostate_report(
        series,
        _window(args),
        ActivityMode(args.mode),
        AggregationMode(args.agg),
        kb=1.0 if args.kb is None else args.kb,
    )
    return render(report, _output_format(args))


def _cmd_rank(args: argparse.Namespace) -> str:
    dataset = _load(args)
    window = _window(args)
    mode = ActivityMode(args.mode)
    aggregation = AggregationMode(args.agg)
    kb = 1.0 if args.kb is None else args.kb
    reports = [macrostate_report(s, window, mode, aggregation, kb=kb) for s in dataset]
    return render(risk_scale(reports), _output_format(args))


def _cmd_compare(args: argparse.Namespace) -> str:
    dataset = _load(args)
    window = _window(args)
    mode = ActivityMode(args.mode)
    aggregation = AggregationMode(args.agg)
    kb = 1.0 if args.kb is None else args.kb
    groups = []
    for label in args.labels:
        symbol, _, market = label.partition("@")
        series = _resolve(dataset, symbol, market or None)
        groups.append((label, macrostate_report(series, window, mode, aggregation, kb=kb)))
    return render(compare_markets(groups), _output_format(args))


def _cmd_precinct(args: argparse.Namespace) -> str:
    dataset = _load(args)
    series = slice_window(_resolve(dataset, args.symbol, args.market), _window(args))
    points = precinct_points(series, ActivityMode(args.mode), PrecinctAxes(args.axes))
    return render(points, _output_format(args))


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, execute one subcommand, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MarketDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: IO_ERROR: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: INVALID_VALUE: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()

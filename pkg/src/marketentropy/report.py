"""Deterministic serialization of reports, scales, series, and points.

Output is plain text: CSV with fixed headers, or JSON. Identical values
render to byte-identical streams. Every number is written as the shortest
decimal string that parses back to the same double, expanded positionally
in CSV so that rendered datasets stay inside the input dialect (which has
no exponent notation).
"""

from __future__ import annotations

import json
from decimal import Decimal
from enum import Enum, unique
from typing import Sequence

from .indicators import NormalizedVolatilitySeries, StepSeries
from .ingest import HEADER, Dataset, DateWindow
from .macrostate import MacrostateReport
from .ranking import MarketComparison, PrecinctPoint, RiskScale

REPORT_HEADER = "symbol,market,from,to,activity_mode,aggregation,n_valid,n_skipped,p_m,s_e,ln_w_b,t_b"
SCALE_HEADER = "rank,symbol,market,p_m,t_b"
POINT_HEADER = "date,x,y,z"
STEP_HEADER = "date,value"
SKIP_HEADER = "date,skip_reason"
COMPARISON_HEADER = "label," + REPORT_HEADER


@unique
class OutputFormat(Enum):
    CSV_OUT = "csv"
    JSON_OUT = "json"


def _decimal_literal(value: float) -> str:
    """Shortest round-trip rendering, positional (never exponent) form."""
    text = repr(value)
    if "e" in text or "E" in text:
        text = format(Decimal(text), "f")
    return text


def _csv_value(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        raise TypeError("no boolean columns exist")
    if isinstance(value, float):
        return _decimal_literal(value)
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def _csv_lines(header: str, rows: Sequence[Sequence[object]]) -> str:
    lines = [header]
    lines.extend(",".join(_csv_value(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _window_fields(window: DateWindow) -> tuple[str | None, str | None]:
    start = window.start.isoformat() if window.start is not None else None
    end = window.end.isoformat() if window.end is not None else None
    return start, end


def _report_row(report: MacrostateReport) -> list[object]:
    start, end = _window_fields(report.window)
    return [
        report.symbol,
        report.market,
        start,
        end,
        report.activity_mode,
        report.aggregation,
        report.n_valid,
        report.n_skipped,
        report.p_m,
        report.s_e,
        report.ln_w_b,
        report.t_b,
    ]


def _report_obj(report: MacrostateReport) -> dict:
    start, end = _window_fields(report.window)
    return {
        "symbol": report.symbol,
        "market": report.market,
        "from": start,
        "to": end,
        "activity_mode": report.activity_mode.value,
        "aggregation": report.aggregation.value,
        "n_valid": report.n_valid,
        "n_skipped": report.n_skipped,
        "p_m": report.p_m,
        "s_e": report.s_e,
        "ln_w_b": report.ln_w_b,
        "t_b": report.t_b,
    }


def _render_report(report: MacrostateReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV_OUT:
        return _csv_lines(REPORT_HEADER, [_report_row(report)])
    return json.dumps(_report_obj(report), indent=2) + "\n"


def _render_scale(scale: RiskScale, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV_OUT:
        rows = [[e.rank, e.symbol, e.market, e.p_m, e.t_b] for e in scale.entries]
        return _csv_lines(SCALE_HEADER, rows)
    start, end = _window_fields(scale.window)
    obj = {
        "from": start,
        "to": end,
        "activity_mode": scale.activity_mode.value,
        "aggregation": scale.aggregation.value,
        "entries": [
            {
                "rank": e.rank,
                "symbol": e.symbol,
                "market": e.market,
                "p_m": e.p_m,
                "t_b": e.t_b,
            }
            for e in scale.entries
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def _render_steps(series: StepSeries, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV_OUT:
        rows = [[p.date.isoformat(), p.value] for p in series.points]
        return _csv_lines(STEP_HEADER, rows)
    obj = {
        "symbol": series.symbol,
        "market": series.market,
        "kind": series.kind.value,
        "points": [{"date": p.date.isoformat(), "value": p.value} for p in series.points],
    }
    return json.dumps(obj, indent=2) + "\n"


def _render_normalized(series: NormalizedVolatilitySeries, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV_OUT:
        rows = [[p.date.isoformat(), p.value] for p in series.steps.points]
        skip_rows = [[s.date.isoformat(), s.reason] for s in series.skips]
        return _csv_lines(STEP_HEADER, rows) + "\n" + _csv_lines(SKIP_HEADER, skip_rows)
    obj = {
        "symbol": series.steps.symbol,
        "market": series.steps.market,
        "kind": series.steps.kind.value,
        "activity_mode": series.mode.value,
        "points": [
            {"date": p.date.isoformat(), "value": p.value} for p in series.steps.points
        ],
        "skips": [
            {"date": s.date.isoformat(), "skip_reason": s.reason.value} for s in series.skips
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def _render_comparison(comparison: MarketComparison, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV_OUT:
        rows = [[label] + _report_row(report) for label, report in comparison.symbol_groups]
        return _csv_lines(COMPARISON_HEADER, rows)
    obj = {
        "groups": [
            {"label": label, "report": _report_obj(report)}
            for label, report in comparison.symbol_groups
        ]
    }
    return json.dumps(obj, indent=2) + "\n"


def _render_points(points: Sequence[PrecinctPoint], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV_OUT:
        rows = [[p.date.isoformat(), p.x, p.y, p.z] for p in points]
        return _csv_lines(POINT_HEADER, rows)
    obj = {
        "axes": points[0].axes.value,
        "points": [
            {"date": p.date.isoformat(), "x": p.x, "y": p.y, "z": p.z} for p in points
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def _render_dataset(dataset: Dataset, fmt: OutputFormat) -> str:
    rows = []
    for series in dataset:
        for bar in series.bars:
            rows.append(
                [series.symbol, series.market, bar.date.isoformat(), bar.close, bar.volume]
            )
    if fmt is OutputFormat.CSV_OUT:
        return _csv_lines(HEADER, rows)
    obj = [
        {"symbol": r[0], "market": r[1], "date": r[2], "close": r[3], "volume": r[4]}
        for r in rows
    ]
    return json.dumps(obj, indent=2) + "\n"


Renderable = (
    MacrostateReport
    | RiskScale
    | StepSeries
    | NormalizedVolatilitySeries
    | MarketComparison
    | Dataset
    | Sequence[PrecinctPoint]
)


def render(value: Renderable, fmt: OutputFormat | None = None) -> str:
    """Serialize a result value to CSV or JSON text.

    With fmt=None, a single MacrostateReport defaults to JSON and every
    tabular value defaults to CSV.
    """
    if isinstance(value, MacrostateReport):
        return _render_report(value, fmt or OutputFormat.JSON_OUT)
    fmt = fmt or OutputFormat.CSV_OUT
    if isinstance(value, RiskScale):
        return _render_scale(value, fmt)
    if isinstance(value, NormalizedVolatilitySeries):
        return _render_normalized(value, fmt)
    if isinstance(value, StepSeries):
        return _render_steps(value, fmt)
    if isinstance(value, MarketComparison):
        return _render_comparison(value, fmt)
    if isinstance(value, Dataset):
        return _render_dataset(value, fmt)
    if isinstance(value, (list, tuple)):
        if not value:
            raise ValueError("cannot render an empty point sequence")
        if all(isinstance(p, PrecinctPoint) for p in value):
            return _render_points(value, fmt)
    raise TypeError(f"no renderer for {type(value).__name__}")

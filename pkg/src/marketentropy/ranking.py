"""Risk scales, cross-market comparisons, and precinct point clouds.

A risk scale orders an instrument universe by descending macrostate
parameter: the highest entropy, the most uncertain instrument, ranks
first. The ranking key is P_M rather than T_B because the temperature is
undefined at P_M = 0 and its ordering is implied wherever it exists.

Precinct points are the plot-ready coordinates of the 3D "virtual
precinct" view of a series: either (price, volume, normalized volatility)
or (step index, close, simple volatility) per bar. Rendering them is
someone else's job.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass
from enum import Enum, unique
from typing import Sequence

from . import _kernels
from .errors import AllStepsSkippedError, EmptySeriesError, EmptyUniverseError, MixedParametersError
from .indicators import SkipRecord, _skip_reason, normalized_step_arrays
from .ingest import DateWindow
from .macrostate import AggregationMode, MacrostateReport
from .model import DEFAULT_ACTIVITY_MODE, ActivityMode, InstrumentSeries


@dataclass(frozen=True, slots=True)
class RiskEntry:
    rank: int
    symbol: str
    market: str
    p_m: float
    t_b: float | None


@dataclass(frozen=True, slots=True)
class RiskScale:
    """Universe ordered by descending p_m; ranks are consecutive from 1.

    Ties are broken by ascending symbol then market, so the order is
    deterministic and independent of input order.
    """

    window: DateWindow
    activity_mode: ActivityMode
    aggregation: AggregationMode
    entries: tuple[RiskEntry, ...]


@dataclass(frozen=True, slots=True)
class MarketComparison:
    """Same-window reports side by side, one per caller-supplied label."""

    symbol_groups: tuple[tuple[str, MacrostateReport], ...]


@unique
class PrecinctAxes(Enum):
    PRICE_VOLUME_VOLNORM = "pvz"
    TIME_VALUE_VOL = "tvz"


@dataclass(frozen=True, slots=True)
class PrecinctPoint:
    date: datetime.date
    x: float
    y: float
    z: float
    axes: PrecinctAxes


def _check_shared_parameters(reports: Sequence[MacrostateReport]) -> None:
    first = reports[0]
    for report in reports[1:]:
        if (
            report.window != first.window
            or report.activity_mode is not first.activity_mode
            or report.aggregation is not first.aggregation
        ):
            raise MixedParametersError(
                "reports disagree on window, activity mode, or aggregation",
                first=f"{first.symbol}@{first.market}",
                offender=f"{report.symbol}@{report.market}",
            )


def risk_scale(reports: Sequence[MacrostateReport]) -> RiskScale:
    """Order a universe of reports into a risk scale, most uncertain first."""
    reports = list(reports)
    if not reports:
        raise EmptyUniverseError("no reports to rank")
    _check_shared_parameters(reports)
    seen = set()
    for report in reports:
        key = (report.symbol, report.market)
        if key in seen:
            raise ValueError(f"duplicate instrument in universe: {key[0]}@{key[1]}")
        seen.add(key)
    ordered = sorted(reports, key=lambda r: (-r.p_m, r.symbol, r.market))
    entries = tuple(
        RiskEntry(rank, report.symbol, report.market, report.p_m, report.t_b)
        for rank, report in enumerate(ordered, start=1)
    )
    first = reports[0]
    return RiskScale(first.window, first.activity_mode, first.aggregation, entries)


def compare_markets(
    labeled_reports: Sequence[tuple[str, MacrostateReport]],
) -> MarketComparison:
    """Side-by-side reports for one emitter across venues, label order kept."""
    groups = tuple((str(label), report) for label, report in labeled_reports)
    if not groups:
        raise EmptyUniverseError("no labeled reports to compare")
    _check_shared_parameters([report for _, report in groups])
    return MarketComparison(groups)


def precinct_points(
    series: InstrumentSeries,
    mode: ActivityMode = DEFAULT_ACTIVITY_MODE,
    axes: PrecinctAxes = PrecinctAxes.PRICE_VOLUME_VOLNORM,
) -> tuple[PrecinctPoint, ...]:
    """Plot-ready 3D points for one series.

    PRICE_VOLUME_VOLNORM: one point per defined normalized-volatility step,
    (x, y, z) = (close_t, volume_t, normalized volatility at t).
    TIME_VALUE_VOL: one point per bar pair, (x, y, z) = (1-based step index
    from the window start, close_t, simple volatility at t).
    """
    bars = series.bars
    if len(bars) < 2:
        raise EmptySeriesError(
            f"need at least 2 bars, got {len(bars)}",
            symbol=series.symbol,
            market=series.market,
        )
    if axes is PrecinctAxes.TIME_VALUE_VOL:
        diffs = _kernels.step_diffs(series.closes())
        return tuple(
            PrecinctPoint(bars[i + 1].date, float(i + 1), bars[i + 1].close, diffs[i], axes)
            for i in range(len(diffs))
        )
    values, codes = normalized_step_arrays(series, mode)
    points = []
    for i in range(len(codes)):
        if codes[i] == _kernels.STEP_VALID:
            bar = bars[i + 1]
            points.append(PrecinctPoint(bar.date, bar.close, bar.volume, values[i], axes))
    if not points:
        skips = tuple(
            SkipRecord(bars[i + 1].date, _skip_reason(codes[i])) for i in range(len(codes))
        )
        raise AllStepsSkippedError(
            "every consecutive pair was skipped",
            skips=skips,
            symbol=series.symbol,
            market=series.market,
        )
    return tuple(points)

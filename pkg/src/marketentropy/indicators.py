"""Per-step volatility series.

Three kinds are computed from consecutive bar pairs:

* simple: the price difference p_t - p_{t-1}
* log: ln(p_t) - ln(p_{t-1}), the usual choice for long horizons
* normalized: the relative change of the activity value,
  (a_t - a_{t-1}) / a_{t-1}, which folds traded volume into the measure
  and is the input to every macrostate quantity

A pair whose denominator activity is zero, or whose activity is undefined
for the mode, is skipped and recorded rather than epsilon-floored: a floor
would manufacture arbitrarily huge terms out of untraded days and let data
artifacts dominate the window mean. A skipped step does not restart any
chain; every pair is evaluated independently on the raw consecutive bars.
Step values are reported at the date of the later bar.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass
from enum import Enum, unique
from typing import NamedTuple

from . import _kernels
from .errors import AllStepsSkippedError, EmptySeriesError, NonpositivePriceError
from .model import (
    ACTIVITY_MODE_CODES,
    DEFAULT_ACTIVITY_MODE,
    ActivityMode,
    InstrumentSeries,
)


@unique
class StepKind(Enum):
    SIMPLE = "simple"
    LOG = "log"
    NORMALIZED = "normalized"


@unique
class SkipReason(Enum):
    ZERO_DENOMINATOR = "zero_denominator"
    UNDEFINED_ACTIVITY = "undefined_activity"


class StepPoint(NamedTuple):
    date: datetime.date
    value: float


@dataclass(frozen=True, slots=True)
class StepSeries:
    """One value per consecutive bar pair that produced a defined term."""

    symbol: str
    market: str
    kind: StepKind
    points: tuple[StepPoint, ...]


@dataclass(frozen=True, slots=True)
class SkipRecord:
    date: datetime.date
    reason: SkipReason


@dataclass(frozen=True, slots=True)
class NormalizedVolatilitySeries:
    """Normalized-volatility steps plus the accounting of skipped pairs.

    Invariant: len(steps.points) + len(skips) == bars - 1.
    """

    steps: StepSeries
    skips: tuple[SkipRecord, ...]
    mode: ActivityMode

    @property
    def n_valid(self) -> int:
        return len(self.steps.points)

    @property
    def n_skipped(self) -> int:
        return len(self.skips)

    def values(self) -> tuple[float, ...]:
        return tuple(point.value for point in self.steps.points)


def simple_volatility(series: InstrumentSeries) -> StepSeries:
    """Price differences p_t - p_{t-1}; a 1-bar series yields no points."""
    if len(series.bars) == 0:
        raise EmptySeriesError(
            "no bars to differentiate", symbol=series.symbol, market=series.market
        )
    diffs = _kernels.step_diffs(series.closes())
    bars = series.bars
    points = tuple(StepPoint(bars[i + 1].date, diffs[i]) for i in range(len(diffs)))
    return StepSeries(series.symbol, series.market, StepKind.SIMPLE, points)


def log_volatility(series: InstrumentSeries) -> StepSeries:
    """Log-price differences ln(p_t) - ln(p_{t-1}); requires positive closes."""
    if len(series.bars) == 0:
        raise EmptySeriesError(
            "no bars to differentiate", symbol=series.symbol, market=series.market
        )
    for bar in series.bars:
        if bar.close <= 0.0:
            raise NonpositivePriceError(
                f"logarithm undefined for close {bar.close!r}",
                symbol=series.symbol,
                market=series.market,
                date=bar.date.isoformat(),
            )
    diffs = _kernels.log_step_diffs(series.closes())
    bars = series.bars
    points = tuple(StepPoint(bars[i + 1].date, diffs[i]) for i in range(len(diffs)))
    return StepSeries(series.symbol, series.market, StepKind.LOG, points)


def normalized_step_arrays(series: InstrumentSeries, mode: ActivityMode):
    """Kernel-level terms and status codes for one series.

    Returns (values, codes) arrays of length bars - 1; shared by the
    report builder, which needs the numbers but not the point objects.
    """
    if len(series.bars) < 2:
        raise EmptySeriesError(
            f"need at least 2 bars, got {len(series.bars)}",
            symbol=series.symbol,
            market=series.market,
        )
    activities = _kernels.activity_values(
        series.closes(), series.volumes(), ACTIVITY_MODE_CODES[mode]
    )
    return _kernels.normalized_steps(activities)


def _skip_reason(code: int) -> SkipReason:
    if code == _kernels.STEP_ZERO_DENOMINATOR:
        return SkipReason.ZERO_DENOMINATOR
    return SkipReason.UNDEFINED_ACTIVITY


def normalized_volatility(
    series: InstrumentSeries, mode: ActivityMode = DEFAULT_ACTIVITY_MODE
) -> NormalizedVolatilitySeries:
    """Relative activity changes (a_t - a_{t-1}) / a_{t-1} with skip accounting.

    Raises AllStepsSkippedError when no pair produced a defined term, so a
    window mean can never silently be computed over nothing; the error
    carries the skip records.
    """
    values, codes = normalized_step_arrays(series, mode)
    bars = series.bars
    points = []
    skips = []
    for i in range(len(codes)):
        day = bars[i + 1].date
        if codes[i] == _kernels.STEP_VALID:
            points.append(StepPoint(day, values[i]))
        else:
            skips.append(SkipRecord(day, _skip_reason(codes[i])))
    if not points:
        raise AllStepsSkippedError(
            "every consecutive pair was skipped",
            skips=tuple(skips),
            symbol=series.symbol,
            market=series.market,
        )
    steps = StepSeries(series.symbol, series.market, StepKind.NORMALIZED, tuple(points))
    return NormalizedVolatilitySeries(steps, tuple(skips), mode)

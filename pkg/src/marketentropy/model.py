"""Core domain types and the activity parameter.

A bar's activity is the scalar that one time bucket collapses into before
any volatility math happens. The canonical choice is price times traded
volume, treating a heavily traded expensive share as carrying more
"momentum" than either number alone; price/volume, volume/price, and
bare price are the supported alternatives (bare price serves index series
that have no meaningful volume).
"""

from __future__ import annotations

import datetime
import math
from array import array
from dataclasses import dataclass
from enum import Enum, unique

from . import _kernels
from .errors import DivisionByZeroActivityError


@unique
class ActivityMode(Enum):
    """How a single bar collapses into one scalar activity value.

    Values double as the CLI / serialized spellings.
    """

    PRICE_TIMES_VOLUME = "pv"
    PRICE_OVER_VOLUME = "p_over_v"
    VOLUME_OVER_PRICE = "v_over_p"
    PRICE_ONLY = "p_only"


DEFAULT_ACTIVITY_MODE = ActivityMode.PRICE_TIMES_VOLUME

# kernel-level integer codes for each mode
ACTIVITY_MODE_CODES: dict[ActivityMode, int] = {
    ActivityMode.PRICE_TIMES_VOLUME: _kernels.MODE_PRICE_TIMES_VOLUME,
    ActivityMode.PRICE_OVER_VOLUME: _kernels.MODE_PRICE_OVER_VOLUME,
    ActivityMode.VOLUME_OVER_PRICE: _kernels.MODE_VOLUME_OVER_PRICE,
    ActivityMode.PRICE_ONLY: _kernels.MODE_PRICE_ONLY,
}


@dataclass(frozen=True, slots=True)
class PriceBar:
    """One time bucket of one instrument: date, closing price, traded volume.

    Volumes are plain nonnegative decimals, not integers, so index levels
    and fractional instruments fit the same type. Bucket size is whatever
    the data carries (day, hour, month); consecutive bars are consecutive
    steps regardless.
    """

    date: datetime.date
    close: float
    volume: float

    def __post_init__(self) -> None:
        if type(self.date) is not datetime.date:
            # datetime.datetime is a date subclass but would leak a time
            # component into serialized output
            if isinstance(self.date, datetime.datetime) or not isinstance(
                self.date, datetime.date
            ):
                raise TypeError(f"date must be a calendar date, got {self.date!r}")
        close = float(self.close)
        volume = float(self.volume)
        if not (close >= 0.0) or math.isinf(close):
            raise ValueError(f"close must be finite and nonnegative, got {self.close!r}")
        if not (volume >= 0.0) or math.isinf(volume):
            raise ValueError(f"volume must be finite and nonnegative, got {self.volume!r}")
        object.__setattr__(self, "close", close)
        object.__setattr__(self, "volume", volume)


@dataclass(frozen=True, slots=True)
class InstrumentSeries:
    """Ordered bars for one (symbol, market) pair; the unit of analysis.

    The same symbol may appear on several markets (spot and futures venues,
    a foreign listing); each (symbol, market) pair is its own series.
    Immutable after construction, safe to share across workers.
    """

    symbol: str
    market: str
    bars: tuple[PriceBar, ...]

    def __post_init__(self) -> None:
        if not self.symbol:
            raise ValueError("symbol must be nonempty")
        if not self.market:
            raise ValueError("market must be nonempty")
        bars = tuple(self.bars)
        object.__setattr__(self, "bars", bars)
        for previous, current in zip(bars, bars[1:]):
            if current.date <= previous.date:
                raise ValueError(
                    f"bar dates must be strictly increasing, got {previous.date} "
                    f"then {current.date} for {self.symbol}@{self.market}"
                )

    def __len__(self) -> int:
        return len(self.bars)

    @property
    def key(self) -> tuple[str, str]:
        return (self.symbol, self.market)

    def closes(self) -> array:
        """Close prices as a double array (kernel input)."""
        return array("d", (bar.close for bar in self.bars))

    def volumes(self) -> array:
        """Traded volumes as a double array (kernel input)."""
        return array("d", (bar.volume for bar in self.bars))


def activity(bar: PriceBar, mode: ActivityMode = DEFAULT_ACTIVITY_MODE) -> float:
    """Collapse one bar into its scalar activity value.

    Raises DivisionByZeroActivityError when the mode divides by a zero
    field, which marks the bucket untradeable for that mode.
    """
    if mode is ActivityMode.PRICE_TIMES_VOLUME:
        return bar.close * bar.volume
    if mode is ActivityMode.PRICE_OVER_VOLUME:
        if bar.volume == 0.0:
            raise DivisionByZeroActivityError(
                "price/volume is undefined on a zero-volume bar", date=bar.date
            )
        return bar.close / bar.volume
    if mode is ActivityMode.VOLUME_OVER_PRICE:
        if bar.close == 0.0:
            raise DivisionByZeroActivityError(
                "volume/price is undefined on a zero-price bar", date=bar.date
            )
        return bar.volume / bar.close
    if mode is ActivityMode.PRICE_ONLY:
        return bar.close
    raise ValueError(f"unknown activity mode: {mode!r}")

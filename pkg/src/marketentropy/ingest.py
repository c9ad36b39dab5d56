"""Strict CSV ingestion and date windowing.

Input dialect, enforced byte-for-byte: header line
``symbol,market,date,close,volume``, comma delimiter, no quoting
(identifiers restricted to ``[A-Za-z0-9_.-]``), ISO-8601 dates, decimal
number literals with optional fractional part, ``\\n`` or ``\\r\\n`` line
endings, blank lines ignored. Anything else is a PARSE_ERROR with line and
field position. Out-of-order dates are rejected unless sorting is asked
for explicitly; silent reordering hides data problems that would distort
every downstream indicator.
"""

from __future__ import annotations

import datetime
import math
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import IO, Mapping, Union

from .errors import (
    DuplicateDateError,
    NegativeValueError,
    NonMonotoneDatesError,
    ParseError,
)
from .model import InstrumentSeries, PriceBar

HEADER = "symbol,market,date,close,volume"

_IDENTIFIER_RE = re.compile(r"[A-Za-z0-9_.\-]+\Z")
_DATE_RE = re.compile(r"\d{4}-\d{2}-\d{2}\Z")
_NUMBER_RE = re.compile(r"-?\d+(\.\d+)?\Z")


@dataclass(frozen=True, slots=True)
class DateWindow:
    """Inclusive date range; either bound may be open (None)."""

    start: datetime.date | None = None
    end: datetime.date | None = None

    def __post_init__(self) -> None:
        if self.start is not None and self.end is not None and self.start > self.end:
            raise ValueError(f"window start {self.start} is after end {self.end}")

    def contains(self, day: datetime.date) -> bool:
        if self.start is not None and day < self.start:
            return False
        if self.end is not None and day > self.end:
            return False
        return True

    def __str__(self) -> str:
        start = self.start.isoformat() if self.start else "*"
        end = self.end.isoformat() if self.end else "*"
        return f"[{start}, {end}]"


OPEN_WINDOW = DateWindow()


@dataclass(frozen=True)
class Dataset:
    """Instrument series keyed by (symbol, market), insertion-ordered."""

    series: Mapping[tuple[str, str], InstrumentSeries] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "series", MappingProxyType(dict(self.series)))

    def __len__(self) -> int:
        return len(self.series)

    def __iter__(self):
        return iter(self.series.values())

    def get(self, symbol: str, market: str) -> InstrumentSeries | None:
        return self.series.get((symbol, market))

    def find_symbol(self, symbol: str) -> tuple[InstrumentSeries, ...]:
        """All series carrying the symbol, across markets."""
        return tuple(s for s in self.series.values() if s.symbol == symbol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return dict(self.series) == dict(other.series)


def _parse_number(text: str, line_no: int, column: int, name: str) -> float:
    if not _NUMBER_RE.match(text):
        raise ParseError(line_no, column, f"{name} is not a decimal literal: {text!r}")
    value = float(text)
    if math.isinf(value):
        raise ParseError(line_no, column, f"{name} is out of double range: {text!r}")
    if value < 0.0:
        raise NegativeValueError(line_no, f"negative {name}: {text}")
    return value


def parse_dataset(
    source: Union[str, IO[str]],
    *,
    sort_dates: bool = False,
    default_market: str | None = None,
) -> Dataset:
    """Parse the strict CSV dialect into a Dataset.

    With sort_dates off (default) out-of-order dates within a series are
    rejected; with it on, each series is sorted by date before duplicate
    detection. default_market fills rows whose market field is empty.
    """
    text = source.read() if hasattr(source, "read") else source
    if default_market is not None and not _IDENTIFIER_RE.match(default_market):
        raise ValueError(f"default_market is not a valid identifier: {default_market!r}")

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    bars: dict[tuple[str, str], list[PriceBar]] = {}
    last_date: dict[tuple[str, str], datetime.date] = {}
    header_seen = False

    for index, raw_line in enumerate(lines):
        line_no = index + 1
        line = raw_line[:-1] if raw_line.endswith("\r") else raw_line
        if line == "":
            continue
        if not header_seen:
            if line != HEADER:
                raise ParseError(line_no, 1, f"expected header {HEADER!r}, got {line!r}")
            header_seen = True
            continue

        fields = line.split(",")
        if len(fields) != 5:
            raise ParseError(line_no, len(fields), f"expected 5 fields, got {len(fields)}")
        symbol_text, market_text, date_text, close_text, volume_text = fields

        if not _IDENTIFIER_RE.match(symbol_text):
            raise ParseError(line_no, 1, f"bad symbol identifier: {symbol_text!r}")
        if market_text == "" and default_market is not None:
            market_text = default_market
        if not _IDENTIFIER_RE.match(market_text):
            raise ParseError(line_no, 2, f"bad market identifier: {market_text!r}")
        if not _DATE_RE.match(date_text):
            raise ParseError(line_no, 3, f"date is not YYYY-MM-DD: {date_text!r}")
        try:
            day = datetime.date.fromisoformat(date_text)
        except ValueError:
            raise ParseError(line_no, 3, f"invalid calendar date: {date_text!r}") from None
        close = _parse_number(close_text, line_no, 4, "close")
        volume = _parse_number(volume_text, line_no, 5, "volume")

        key = (symbol_text, market_text)
        if not sort_dates and key in last_date:
            if day == last_date[key]:
                raise DuplicateDateError(
                    "two bars share one date",
                    symbol=symbol_text,
                    market=market_text,
                    date=day.isoformat(),
                )
            if day < last_date[key]:
                raise NonMonotoneDatesError(
                    "bar dates go backwards (pass sort_dates to sort instead)",
                    symbol=symbol_text,
                    market=market_text,
                    date=day.isoformat(),
                )
        last_date[key] = day
        bars.setdefault(key, []).append(PriceBar(day, close, volume))

    if not header_seen:
        raise ParseError(1, 1, f"missing header {HEADER!r}")

    series: dict[tuple[str, str], InstrumentSeries] = {}
    for (symbol, market), bar_list in bars.items():
        if sort_dates:
            bar_list.sort(key=lambda bar: bar.date)
            for previous, current in zip(bar_list, bar_list[1:]):
                if previous.date == current.date:
                    raise DuplicateDateError(
                        "two bars share one date",
                        symbol=symbol,
                        market=market,
                        date=current.date.isoformat(),
                    )
        series[(symbol, market)] = InstrumentSeries(symbol, market, tuple(bar_list))
    return Dataset(series)


def slice_window(series: InstrumentSeries, window: DateWindow) -> InstrumentSeries:
    """Bars whose dates fall inside the inclusive window, order preserved.

    An empty result is a valid, empty series; downstream operations reject
    it with their own errors.
    """
    kept = tuple(bar for bar in series.bars if window.contains(bar.date))
    if len(kept) == len(series.bars):
        return series
    return InstrumentSeries(series.symbol, series.market, kept)

"""Exception types shared across the package.

Every error carries a stable ``code`` string so CLI diagnostics and tests
can match on the error kind without parsing prose messages.
"""

from __future__ import annotations

from typing import Any, ClassVar


class MarketDataError(Exception):
    """Base class for data and computation errors raised by this package."""

    code: ClassVar[str] = "MARKET_DATA_ERROR"

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.message = message
        self.context = dict(context)

    def __str__(self) -> str:
        text = f"{self.code}: {self.message}"
        if self.context:
            details = ", ".join(f"{key}={value}" for key, value in self.context.items())
            text = f"{text} ({details})"
        return text


class ParseError(MarketDataError):
    """Malformed input row or header.

    ``column`` is the 1-based field position; for a wrong field count it is
    the number of fields found.
    """

    code = "PARSE_ERROR"

    def __init__(self, line: int, column: int, reason: str) -> None:
        super().__init__(reason, line=line, column=column)
        self.line = line
        self.column = column


class DuplicateDateError(MarketDataError):
    """Two bars of one (symbol, market) series share a date."""

    code = "DUPLICATE_DATE"


class NonMonotoneDatesError(MarketDataError):
    """Bar dates go backwards within a series and sorting was not requested."""

    code = "NON_MONOTONE_DATES"


class NegativeValueError(MarketDataError):
    """A row carries a negative price or volume."""

    code = "NEGATIVE_VALUE"

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(reason, line=line)
        self.line = line


class DivisionByZeroActivityError(MarketDataError):
    """The activity mode divides by a zero field: the bucket is untradeable
    for that mode."""

    code = "DIVISION_BY_ZERO"


class EmptySeriesError(MarketDataError):
    """Too few bars for the requested computation."""

    code = "EMPTY_SERIES"


class NonpositivePriceError(MarketDataError):
    """Log volatility is undefined on a close <= 0."""

    code = "NONPOSITIVE_PRICE"


class AllStepsSkippedError(MarketDataError):
    """Every consecutive pair was skipped, so no defined term exists.

    ``skips`` carries the skip records so callers can still inspect the
    accounting of what was rejected and why.
    """

    code = "ALL_STEPS_SKIPPED"

    def __init__(self, message: str, skips: tuple = (), **context: Any) -> None:
        super().__init__(message, **context)
        self.skips = tuple(skips)


class EmptyTermsError(MarketDataError):
    """Aggregation was asked for zero terms."""

    code = "EMPTY_TERMS"


class MixedParametersError(MarketDataError):
    """Reports being combined disagree on window, activity mode, or
    aggregation."""

    code = "MIXED_PARAMETERS"


class EmptyUniverseError(MarketDataError):
    """A risk scale was requested over zero reports."""

    code = "EMPTY_UNIVERSE"


class UnknownInstrumentError(MarketDataError):
    """No series matches the requested (symbol, market)."""

    code = "UNKNOWN_INSTRUMENT"


class AmbiguousInstrumentError(MarketDataError):
    """A symbol matches several markets and no market was given."""

    code = "AMBIGUOUS_INSTRUMENT"

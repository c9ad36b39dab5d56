"""Windowed aggregation of normalized volatility into entropy-style indicators.

The macrostate parameter P_M is the mean of the normalized-volatility
terms over a window; it reads as the degree of agitation (disorder) of the
instrument and doubles as its economic entropy S_e. With the per-window
constant fixed to 1/N, the effective multiplicity satisfies
ln W_B = N * P_M. The market temperature T_B is the reciprocal 1/P_M,
undefined at exactly zero.

N counts only valid terms: pairs skipped for zero or undefined activity
appear in n_skipped, never in the denominator, so untraded days cannot
deflate the mean. SIGNED aggregation is the literal mean and the default;
ABSOLUTE averages magnitudes instead, for callers who want oscillation
to register as disorder rather than cancel out, and is always labeled
explicitly in output.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from enum import Enum, unique
from typing import Sequence

from . import _kernels
from .errors import AllStepsSkippedError, EmptyTermsError, MarketDataError
from .indicators import SkipRecord, _skip_reason, normalized_step_arrays
from .ingest import OPEN_WINDOW, DateWindow, slice_window
from .model import DEFAULT_ACTIVITY_MODE, ActivityMode, InstrumentSeries


@unique
class AggregationMode(Enum):
    SIGNED = "signed"
    ABSOLUTE = "abs"


DEFAULT_AGGREGATION = AggregationMode.SIGNED


def _isclose(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=1e-12, abs_tol=0.0)


@dataclass(frozen=True, slots=True)
class MacrostateReport:
    """P_M, S_e, ln W_B, T_B and full provenance for one instrument window.

    t_b is None exactly when p_m == 0. Construction enforces the
    identities s_e == p_m, ln_w_b == n_valid * p_m, t_b == 1 / p_m.
    """

    symbol: str
    market: str
    window: DateWindow
    activity_mode: ActivityMode
    aggregation: AggregationMode
    n_valid: int
    n_skipped: int
    p_m: float
    s_e: float
    ln_w_b: float
    t_b: float | None

    def __post_init__(self) -> None:
        if self.n_valid < 0 or self.n_skipped < 0:
            raise ValueError("term counts must be nonnegative")
        if not math.isfinite(self.p_m):
            raise ValueError(f"p_m must be finite, got {self.p_m!r}")
        if self.s_e != self.p_m:
            raise ValueError("s_e must equal p_m exactly")
        if not _isclose(self.ln_w_b, self.n_valid * self.p_m):
            raise ValueError("ln_w_b must equal n_valid * p_m")
        if self.p_m == 0.0:
            if self.t_b is not None:
                raise ValueError("t_b must be undefined (None) when p_m is zero")
        elif self.t_b is None or not _isclose(self.t_b, 1.0 / self.p_m):
            raise ValueError("t_b must equal 1 / p_m")


def macrostate_parameter(
    terms: Sequence[float], aggregation: AggregationMode = DEFAULT_AGGREGATION
) -> float:
    """Mean of the terms (SIGNED) or of their absolute values (ABSOLUTE)."""
    data = terms if isinstance(terms, array) else array("d", terms)
    if len(data) == 0:
        raise EmptyTermsError("no defined normalized-volatility terms to aggregate")
    return _kernels.mean_terms(data, aggregation is AggregationMode.ABSOLUTE)


def market_temperature(p_m: float) -> float | None:
    """Reciprocal of the macrostate parameter; None at exactly zero.

    Near-zero p_m yields a large finite temperature reported as is; any
    epsilon threshold would be arbitrary, so thresholding is left to
    consumers.
    """
    if p_m == 0.0:
        return None
    return 1.0 / p_m


def effective_multiplicity(p_m: float, n_valid: int) -> tuple[float, float]:
    """(ln W_B, W_B) for a window of n_valid terms.

    ln W_B = n_valid * p_m is always finite and is the primary quantity;
    W_B = exp(ln W_B) overflows double range for long agitated windows and
    is then reported as inf.
    """
    if n_valid < 1:
        raise ValueError(f"n_valid must be at least 1, got {n_valid}")
    ln_w_b = n_valid * p_m
    try:
        w_b = math.exp(ln_w_b)
    except OverflowError:
        w_b = math.inf
    return ln_w_b, w_b


def macrostate_report(
    series: InstrumentSeries,
    window: DateWindow = OPEN_WINDOW,
    activity_mode: ActivityMode = DEFAULT_ACTIVITY_MODE,
    aggregation: AggregationMode = DEFAULT_AGGREGATION,
    kb: float = 1.0,
) -> MacrostateReport:
    """Slice the window, compute normalized volatility, aggregate.

    kb is an optional market-specific constant multiplying P_M (and with
    it S_e and ln W_B); the default 1.0 leaves the plain per-window 1/N
    weighting untouched. T_B is the reciprocal of the scaled value.
    """
    if not math.isfinite(kb) or kb <= 0.0:
        raise ValueError(f"kb must be a positive finite number, got {kb!r}")
    try:
        sliced = slice_window(series, window)
        values, codes = normalized_step_arrays(sliced, activity_mode)
        mean, n_valid = _kernels.masked_mean(
            values, codes, aggregation is AggregationMode.ABSOLUTE
        )
        n_skipped = len(codes) - n_valid
        if n_valid == 0:
            skips = tuple(
                SkipRecord(sliced.bars[i + 1].date, _skip_reason(codes[i]))
                for i in range(len(codes))
            )
            raise AllStepsSkippedError(
                "every consecutive pair in the window was skipped", skips=skips
            )
    except MarketDataError as err:
        err.context.setdefault("symbol", series.symbol)
        err.context.setdefault("market", series.market)
        err.context.setdefault("window", str(window))
        raise
    p_m = mean if kb == 1.0 else mean * kb
    if not math.isfinite(p_m):
        raise ValueError(
            f"normalized-volatility terms overflowed for {series.symbol}@{series.market}"
        )
    return MacrostateReport(
        symbol=series.symbol,
        market=series.market,
        window=window,
        activity_mode=activity_mode,
        aggregation=aggregation,
        n_valid=n_valid,
        n_skipped=n_skipped,
        p_m=p_m,
        s_e=p_m,
        ln_w_b=n_valid * p_m,
        t_b=market_temperature(p_m),
    )

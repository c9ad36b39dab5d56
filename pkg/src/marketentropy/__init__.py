"""Entropy-style market risk indicators over daily price/volume series.

The library treats one trading day of an instrument as a microstate
described by an activity parameter (canonically price times traded
volume), measures disorder as the mean relative step of that activity
over a window, and derives an entropy value, an effective multiplicity,
and a market temperature from it. Universes of instruments can then be
ordered into risk scales or compared venue against venue.

Hot numeric loops run in a compiled extension when it is available;
``KERNEL_BACKEND`` names the implementation in use ("compiled" or
"pure"). Setting the environment variable ``MARKETENTROPY_PURE=1``
before import forces the pure-Python fallback.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import (
    AllStepsSkippedError,
    AmbiguousInstrumentError,
    DivisionByZeroActivityError,
    DuplicateDateError,
    EmptySeriesError,
    EmptyTermsError,
    EmptyUniverseError,
    MarketDataError,
    MixedParametersError,
    NegativeValueError,
    NonMonotoneDatesError,
    NonpositivePriceError,
    ParseError,
    UnknownInstrumentError,
)
from .indicators import (
    NormalizedVolatilitySeries,
    SkipReason,
    SkipRecord,
    StepKind,
    StepPoint,
    StepSeries,
    log_volatility,
    normalized_volatility,
    simple_volatility,
)
from .ingest import (
    HEADER,
    OPEN_WINDOW,
    Dataset,
    DateWindow,
    parse_dataset,
    slice_window,
)
from .macrostate import (
    DEFAULT_AGGREGATION,
    AggregationMode,
    MacrostateReport,
    effective_multiplicity,
    macrostate_parameter,
    macrostate_report,
    market_temperature,
)
from .model import (
    DEFAULT_ACTIVITY_MODE,
    ActivityMode,
    InstrumentSeries,
    PriceBar,
    activity,
)
from .ranking import (
    MarketComparison,
    PrecinctAxes,
    PrecinctPoint,
    RiskEntry,
    RiskScale,
    compare_markets,
    precinct_points,
    risk_scale,
)
from .report import OutputFormat, render

__version__ = "0.1.0"

__all__ = [
    "ActivityMode",
    "AggregationMode",
    "AllStepsSkippedError",
    "AmbiguousInstrumentError",
    "Dataset",
    "DateWindow",
    "DEFAULT_ACTIVITY_MODE",
    "DEFAULT_AGGREGATION",
    "DivisionByZeroActivityError",
    "DuplicateDateError",
    "EmptySeriesError",
    "EmptyTermsError",
    "EmptyUniverseError",
    "HEADER",
    "InstrumentSeries",
    "KERNEL_BACKEND",
    "MacrostateReport",
    "MarketComparison",
    "MarketDataError",
    "MixedParametersError",
    "NegativeValueError",
    "NonMonotoneDatesError",
    "NonpositivePriceError",
    "NormalizedVolatilitySeries",
    "OPEN_WINDOW",
    "OutputFormat",
    "ParseError",
    "PrecinctAxes",
    "PrecinctPoint",
    "PriceBar",
    "RiskEntry",
    "RiskScale",
    "SkipReason",
    "SkipRecord",
    "StepKind",
    "StepPoint",
    "StepSeries",
    "UnknownInstrumentError",
    "activity",
    "compare_markets",
    "effective_multiplicity",
    "log_volatility",
    "macrostate_parameter",
    "macrostate_report",
    "market_temperature",
    "normalized_volatility",
    "parse_dataset",
    "precinct_points",
    "render",
    "risk_scale",
    "simple_volatility",
    "slice_window",
    "__version__",
]

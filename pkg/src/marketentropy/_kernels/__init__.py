"""Numeric kernel backends.

The compiled extension (built from ``_core.pyx``) is preferred when
available; ``pure.py`` is the drop-in fallback, selected when the
extension was not built or when the environment variable
``MARKETENTROPY_PURE`` is set to a non-empty value other than ``0``.

Both backends expose the same functions and return bit-identical results;
``BACKEND`` names the one in use ("compiled" or "pure").
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("MARKETENTROPY_PURE", "0") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND_NAME

MODE_PRICE_TIMES_VOLUME = pure.MODE_PRICE_TIMES_VOLUME
MODE_PRICE_OVER_VOLUME = pure.MODE_PRICE_OVER_VOLUME
MODE_VOLUME_OVER_PRICE = pure.MODE_VOLUME_OVER_PRICE
MODE_PRICE_ONLY = pure.MODE_PRICE_ONLY

STEP_VALID = pure.STEP_VALID
STEP_ZERO_DENOMINATOR = pure.STEP_ZERO_DENOMINATOR
STEP_UNDEFINED_ACTIVITY = pure.STEP_UNDEFINED_ACTIVITY

activity_values = _impl.activity_values
normalized_steps = _impl.normalized_steps
step_diffs = _impl.step_diffs
log_step_diffs = _impl.log_step_diffs
masked_mean = _impl.masked_mean
mean_terms = _impl.mean_terms

__all__ = [
    "BACKEND",
    "MODE_PRICE_TIMES_VOLUME",
    "MODE_PRICE_OVER_VOLUME",
    "MODE_VOLUME_OVER_PRICE",
    "MODE_PRICE_ONLY",
    "STEP_VALID",
    "STEP_ZERO_DENOMINATOR",
    "STEP_UNDEFINED_ACTIVITY",
    "activity_values",
    "normalized_steps",
    "step_diffs",
    "log_step_diffs",
    "masked_mean",
    "mean_terms",
]

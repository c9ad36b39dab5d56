"""Pure-Python numeric kernels.

Behavioral reference for the compiled extension and the fallback backend
when the extension is not built. Both backends run the same IEEE double
operations in the same order, so results are bit-identical.

Undefined activity values (the mode divides by a zero field) are encoded
as NaN inside the kernel layer; callers translate them back into skip
records or errors.
"""

from __future__ import annotations

from array import array
from math import log

BACKEND_NAME = "pure"

MODE_PRICE_TIMES_VOLUME = 0
MODE_PRICE_OVER_VOLUME = 1
MODE_VOLUME_OVER_PRICE = 2
MODE_PRICE_ONLY = 3

STEP_VALID = 0
STEP_ZERO_DENOMINATOR = 1
STEP_UNDEFINED_ACTIVITY = 2

_NAN = float("nan")


def _zeros_d(n: int) -> array:
    return array("d", bytes(8 * n))


def activity_values(closes, volumes, mode: int) -> array:
    """Per-bar activity values; NaN marks bars where the mode divides by zero."""
    n = len(closes)
    if len(volumes) != n:
        raise ValueError("closes and volumes must have equal length")
    out = _zeros_d(n)
    if mode == MODE_PRICE_TIMES_VOLUME:
        for i in range(n):
            out[i] = closes[i] * volumes[i]
    elif mode == MODE_PRICE_OVER_VOLUME:
        for i in range(n):
            v = volumes[i]
            out[i] = closes[i] / v if v != 0.0 else _NAN
    elif mode == MODE_VOLUME_OVER_PRICE:
        for i in range(n):
            c = closes[i]
            out[i] = volumes[i] / c if c != 0.0 else _NAN
    elif mode == MODE_PRICE_ONLY:
        for i in range(n):
            out[i] = closes[i]
    else:
        raise ValueError(f"unknown activity mode code: {mode}")
    return out


def normalized_steps(activities) -> tuple[array, array]:
    """Relative change of activity per consecutive pair, plus a status code.

    Returns (values, codes), both of length len(activities) - 1. values[i]
    is (a[i+1] - a[i]) / a[i] where codes[i] == STEP_VALID and NaN
    otherwise; codes distinguish a zero denominator from an undefined
    activity on either side of the pair.
    """
    n = len(activities)
    m = n - 1 if n > 0 else 0
    values = _zeros_d(m)
    codes = array("b", bytes(m))
    for i in range(m):
        prev = activities[i]
        cur = activities[i + 1]
        if prev != prev or cur != cur:  # NaN encodes undefined
            values[i] = _NAN
            codes[i] = STEP_UNDEFINED_ACTIVITY
        elif prev == 0.0:
            values[i] = _NAN
            codes[i] = STEP_ZERO_DENOMINATOR
        else:
            values[i] = (cur - prev) / prev
    return values, codes


def step_diffs(closes) -> array:
    """One-step differences p[i+1] - p[i]."""
    n = len(closes)
    m = n - 1 if n > 0 else 0
    out = _zeros_d(m)
    for i in range(m):
        out[i] = closes[i + 1] - closes[i]
    return out


def log_step_diffs(closes) -> array:
    """One-step log differences ln(p[i+1]) - ln(p[i]).

    Caller guarantees strictly positive closes. Each log is evaluated once
    per bar, not once per pair.
    """
    n = len(closes)
    m = n - 1 if n > 0 else 0
    out = _zeros_d(m)
    if m:
        prev = log(closes[0])
        for i in range(m):
            cur = log(closes[i + 1])
            out[i] = cur - prev
            prev = cur
    return out


def masked_mean(values, codes, absolute: bool) -> tuple[float, int]:
    """Naive left-to-right mean over entries whose code is STEP_VALID.

    Returns (mean, n_valid); mean is NaN when nothing is valid (callers
    must check n_valid before using it).
    """
    total = 0.0
    count = 0
    if absolute:
        for i in range(len(values)):
            if codes[i] == STEP_VALID:
                total += abs(values[i])
                count += 1
    else:
        for i in range(len(values)):
            if codes[i] == STEP_VALID:
                total += values[i]
                count += 1
    if count == 0:
        return _NAN, 0
    return total / count, count


def mean_terms(terms, absolute: bool) -> float:
    """Naive left-to-right mean of terms, optionally of their absolute values.

    Caller guarantees terms is nonempty.
    """
    total = 0.0
    n = len(terms)
    if absolute:
        for i in range(n):
            total += abs(terms[i])
    else:
        for i in range(n):
            total += terms[i]
    return total / n

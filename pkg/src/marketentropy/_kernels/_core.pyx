# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled numeric kernels.

Twin of ``pure.py``: same functions, same IEEE double operations in the
same order, so the two backends return bit-identical results. Compiled
without -ffast-math on purpose; the NaN encoding of undefined activities
relies on strict IEEE semantics.
"""

from cpython cimport array
from libc.stdint cimport uint64_t
from libc.string cimport memcpy

import array

from libc.math cimport fabs, log

BACKEND_NAME = "compiled"

MODE_PRICE_TIMES_VOLUME = 0
MODE_PRICE_OVER_VOLUME = 1
MODE_VOLUME_OVER_PRICE = 2
MODE_PRICE_ONLY = 3

STEP_VALID = 0
STEP_ZERO_DENOMINATOR = 1
STEP_UNDEFINED_ACTIVITY = 2


cdef double _quiet_nan() noexcept:
    # The positive quiet NaN, bit for bit the value float("nan") yields.
    # Built from the bit pattern because arithmetic routes (0.0/0.0,
    # Py_HUGE_VAL * 0.) can produce a NaN with the sign bit set on x86,
    # which would break bit-level parity with the pure backend.
    cdef uint64_t bits = 0x7FF8000000000000ULL
    cdef double out
    memcpy(&out, &bits, sizeof(out))
    return out


cdef double _NAN = _quiet_nan()

cdef array.array _DOUBLE_TEMPLATE = array.array("d")
cdef array.array _BYTE_TEMPLATE = array.array("b")


def activity_values(closes, volumes, int mode):
    """Per-bar activity values; NaN marks bars where the mode divides by zero."""
    cdef double[::1] c = closes
    cdef double[::1] v = volumes
    cdef Py_ssize_t n = c.shape[0]
    if v.shape[0] != n:
        raise ValueError("closes and volumes must have equal length")
    cdef array.array out_arr = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    if n == 0:
        return out_arr
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    if mode == MODE_PRICE_TIMES_VOLUME:
        for i in range(n):
            out[i] = c[i] * v[i]
    elif mode == MODE_PRICE_OVER_VOLUME:
        for i in range(n):
            out[i] = c[i] / v[i] if v[i] != 0.0 else _NAN
    elif mode == MODE_VOLUME_OVER_PRICE:
        for i in range(n):
            out[i] = v[i] / c[i] if c[i] != 0.0 else _NAN
    elif mode == MODE_PRICE_ONLY:
        for i in range(n):
            out[i] = c[i]
    else:
        raise ValueError(f"unknown activity mode code: {mode}")
    return out_arr


def normalized_steps(activities):
    """Relative change of activity per consecutive pair, plus a status code.

    Returns (values, codes), both of length len(activities) - 1. values[i]
    is (a[i+1] - a[i]) / a[i] where codes[i] == STEP_VALID and NaN
    otherwise; codes distinguish a zero denominator from an undefined
    activity on either side of the pair.
    """
    cdef double[::1] a = activities
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = n - 1 if n > 0 else 0
    cdef array.array values_arr = array.clone(_DOUBLE_TEMPLATE, m, zero=False)
    cdef array.array codes_arr = array.clone(_BYTE_TEMPLATE, m, zero=True)
    if m == 0:
        return values_arr, codes_arr
    cdef double[::1] values = values_arr
    cdef signed char[::1] codes = codes_arr
    cdef Py_ssize_t i
    cdef double prev, cur
    for i in range(m):
        prev = a[i]
        cur = a[i + 1]
        if prev != prev or cur != cur:  # NaN encodes undefined
            values[i] = _NAN
            codes[i] = STEP_UNDEFINED_ACTIVITY
        elif prev == 0.0:
            values[i] = _NAN
            codes[i] = STEP_ZERO_DENOMINATOR
        else:
            values[i] = (cur - prev) / prev
    return values_arr, codes_arr


def step_diffs(closes):
    """One-step differences p[i+1] - p[i]."""
    cdef double[::1] c = closes
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t m = n - 1 if n > 0 else 0
    cdef array.array out_arr = array.clone(_DOUBLE_TEMPLATE, m, zero=False)
    if m == 0:
        return out_arr
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(m):
        out[i] = c[i + 1] - c[i]
    return out_arr


def log_step_diffs(closes):
    """One-step log differences ln(p[i+1]) - ln(p[i]).

    Caller guarantees strictly positive closes. Each log is evaluated once
    per bar, not once per pair.
    """
    cdef double[::1] c = closes
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t m = n - 1 if n > 0 else 0
    cdef array.array out_arr = array.clone(_DOUBLE_TEMPLATE, m, zero=False)
    if m == 0:
        return out_arr
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double prev, cur
    prev = log(c[0])
    for i in range(m):
        cur = log(c[i + 1])
        out[i] = cur - prev
        prev = cur
    return out_arr


def masked_mean(values, codes, bint absolute):
    """Naive left-to-right mean over entries whose code is STEP_VALID.

    Returns (mean, n_valid); mean is NaN when nothing is valid (callers
    must check n_valid before using it).
    """
    cdef double[::1] v = values
    cdef signed char[::1] k = codes
    cdef Py_ssize_t n = v.shape[0]
    if k.shape[0] != n:
        raise ValueError("values and codes must have equal length")
    cdef double total = 0.0
    cdef Py_ssize_t count = 0
    cdef Py_ssize_t i
    if absolute:
        for i in range(n):
            if k[i] == STEP_VALID:
                total += fabs(v[i])
                count += 1
    else:
        for i in range(n):
            if k[i] == STEP_VALID:
                total += v[i]
                count += 1
    if count == 0:
        return _NAN, 0
    return total / count, count


def mean_terms(terms, bint absolute):
    """Naive left-to-right mean of terms, optionally of their absolute values.

    Caller guarantees terms is nonempty.
    """
    cdef double[::1] t = terms
    cdef Py_ssize_t n = t.shape[0]
    cdef double total = 0.0
    cdef Py_ssize_t i
    if absolute:
        for i in range(n):
            total += fabs(t[i])
    else:
        for i in range(n):
            total += t[i]
    return total / n

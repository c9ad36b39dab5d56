"""Backend parity: the compiled extension and the pure fallback must be
bit-identical on every function, including NaN encodings and status codes."""

from __future__ import annotations

import math
import os
import struct
import subprocess
import sys
from array import array

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marketentropy._kernels import pure

try:
    from marketentropy._kernels import _core as compiled
except ImportError:
    compiled = None

BACKENDS = [pure] if compiled is None else [pure, compiled]

needs_both = pytest.mark.skipif(compiled is None, reason="compiled extension not built")

doubles = st.floats(allow_nan=False, min_value=0.0, max_value=1e9)
columns = st.lists(st.tuples(doubles, doubles), min_size=0, max_size=64)


def bits(values) -> list[bytes]:
    return [struct.pack("<d", v) for v in values]


def col_arrays(pairs):
    closes = array("d", (p[0] for p in pairs))
    volumes = array("d", (p[1] for p in pairs))
    return closes, volumes


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
class TestKernelSemantics:
    def test_activity_modes(self, backend):
        closes = array("d", [10.0, 0.0, 4.0])
        volumes = array("d", [5.0, 2.0, 0.0])
        assert list(backend.activity_values(closes, volumes, 0)) == [50.0, 0.0, 0.0]
        pv = backend.activity_values(closes, volumes, 1)
        assert pv[0] == 2.0 and pv[1] == 0.0 and math.isnan(pv[2])
        vp = backend.activity_values(closes, volumes, 2)
        assert vp[0] == 0.5 and math.isnan(vp[1]) and vp[2] == 0.0
        assert list(backend.activity_values(closes, volumes, 3)) == [10.0, 0.0, 4.0]

    def test_normalized_steps_codes(self, backend):
        acts = array("d", [100.0, 0.0, 50.0, float("nan"), 25.0])
        values, codes = backend.normalized_steps(acts)
        assert list(codes) == [
            backend.STEP_VALID,
            backend.STEP_ZERO_DENOMINATOR,
            backend.STEP_UNDEFINED_ACTIVITY,
            backend.STEP_UNDEFINED_ACTIVITY,
        ]
        assert values[0] == -1.0

    def test_empty_input(self, backend):
        empty = array("d")
        assert len(backend.activity_values(empty, empty, 0)) == 0
        values, codes = backend.normalized_steps(empty)
        assert len(values) == 0 and len(codes) == 0
        assert len(backend.step_diffs(empty)) == 0

    def test_single_element(self, backend):
        one = array("d", [5.0])
        values, codes = backend.normalized_steps(one)
        assert len(values) == 0 and len(codes) == 0

    def test_step_diffs(self, backend):
        assert list(backend.step_diffs(array("d", [10.0, 12.0, 11.0]))) == [2.0, -1.0]

    def test_log_step_diffs(self, backend):
        out = backend.log_step_diffs(array("d", [1.0, math.e]))
        assert list(out) == [1.0]

    def test_masked_mean(self, backend):
        values = array("d", [1.0, float("nan"), -3.0])
        codes = array("b", [0, 1, 0])
        mean, n = backend.masked_mean(values, codes, False)
        assert (mean, n) == (-1.0, 2)
        mean_abs, n = backend.masked_mean(values, codes, True)
        assert (mean_abs, n) == (2.0, 2)

    def test_masked_mean_all_invalid(self, backend):
        values = array("d", [float("nan")])
        codes = array("b", [1])
        mean, n = backend.masked_mean(values, codes, False)
        assert n == 0 and math.isnan(mean)

    def test_mean_terms(self, backend):
        terms = array("d", [0.1, -0.1])
        assert backend.mean_terms(terms, False) == 0.0
        assert backend.mean_terms(terms, True) == 0.1


@needs_both
class TestBackendParity:
    @given(pairs=columns, mode=st.integers(min_value=0, max_value=3))
    @settings(max_examples=120)
    def test_activity_values_bit_identical(self, pairs, mode):
        closes, volumes = col_arrays(pairs)
        a = pure.activity_values(closes, volumes, mode)
        b = compiled.activity_values(closes, volumes, mode)
        assert bits(a) == bits(b)

    @given(pairs=columns, mode=st.integers(min_value=0, max_value=3))
    @settings(max_examples=120)
    def test_full_pipeline_bit_identical(self, pairs, mode):
        closes, volumes = col_arrays(pairs)
        for backend_pair in [(pure, compiled)]:
            outs = []
            for backend in backend_pair:
                acts = backend.activity_values(closes, volumes, mode)
                values, codes = backend.normalized_steps(acts)
                mean, n = backend.masked_mean(values, codes, False)
                mean_abs, _ = backend.masked_mean(values, codes, True)
                outs.append((bits(values), list(codes), bits([mean, mean_abs]), n))
            assert outs[0] == outs[1]

    @given(
        closes=st.lists(
            st.floats(min_value=1e-6, max_value=1e9), min_size=0, max_size=64
        )
    )
    @settings(max_examples=120)
    def test_diff_kernels_bit_identical(self, closes):
        data = array("d", closes)
        assert bits(pure.step_diffs(data)) == bits(compiled.step_diffs(data))
        assert bits(pure.log_step_diffs(data)) == bits(compiled.log_step_diffs(data))

    @given(
        terms=st.lists(
            st.floats(allow_nan=False, allow_infinity=False, min_value=-1.0, max_value=1e6),
            min_size=1,
            max_size=256,
        ),
        absolute=st.booleans(),
    )
    @settings(max_examples=120)
    def test_mean_terms_bit_identical(self, terms, absolute):
        data = array("d", terms)
        a = pure.mean_terms(data, absolute)
        b = compiled.mean_terms(data, absolute)
        assert struct.pack("<d", a) == struct.pack("<d", b)


class TestBackendSelection:
    def test_backend_name_exposed(self):
        import marketentropy

        assert marketentropy.KERNEL_BACKEND in ("compiled", "pure")

    def test_env_var_forces_pure(self):
        env = dict(os.environ)
        env["MARKETENTROPY_PURE"] = "1"
        out = subprocess.run(
            [sys.executable, "-c", "import marketentropy; print(marketentropy.KERNEL_BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert out.stdout.strip() == "pure"

    @needs_both
    def test_default_prefers_compiled(self):
        env = dict(os.environ)
        env.pop("MARKETENTROPY_PURE", None)
        out = subprocess.run(
            [sys.executable, "-c", "import marketentropy; print(marketentropy.KERNEL_BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert out.stdout.strip() == "compiled"

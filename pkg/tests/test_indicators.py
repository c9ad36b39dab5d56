"""Per-step volatility series: simple, log, normalized."""

from __future__ import annotations

import datetime
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marketentropy import (
    ActivityMode,
    AllStepsSkippedError,
    EmptySeriesError,
    InstrumentSeries,
    NonpositivePriceError,
    SkipReason,
    StepKind,
    log_volatility,
    normalized_volatility,
    simple_volatility,
)

from conftest import make_series, oracle_terms

D = datetime.date

positive_closes = st.lists(
    st.floats(min_value=1e-3, max_value=1e4, allow_nan=False), min_size=2, max_size=200
)
volumes_with_zeros = st.lists(
    st.one_of(st.just(0.0), st.floats(min_value=0.0, max_value=1e6, allow_nan=False)),
    min_size=2,
    max_size=200,
)


class TestSimpleVolatility:
    def test_price_differences(self):
        out = simple_volatility(make_series([10, 12, 11]))
        assert out.kind is StepKind.SIMPLE
        assert [p.value for p in out.points] == [2.0, -1.0]

    def test_constant_series(self):
        out = simple_volatility(make_series([5, 5, 5]))
        assert [p.value for p in out.points] == [0.0, 0.0]

    def test_single_bar_yields_empty_series(self):
        out = simple_volatility(make_series([10]))
        assert out.points == ()

    def test_zero_bars_rejected(self):
        with pytest.raises(EmptySeriesError):
            simple_volatility(InstrumentSeries("TST", "XMKT", ()))

    def test_points_dated_at_later_bar(self):
        out = simple_volatility(make_series([10, 12], start=D(2006, 1, 2)))
        assert out.points[0].date == D(2006, 1, 3)


class TestLogVolatility:
    def test_identity_step(self):
        out = log_volatility(make_series([10, 10]))
        assert [p.value for p in out.points] == [0.0]

    def test_log_ratio_value(self):
        out = log_volatility(make_series([10, 12]))
        assert math.isclose(
            out.points[0].value, 0.18232155679395462, rel_tol=1e-12, abs_tol=0.0
        )

    def test_exponential_closes_give_unit_steps(self):
        out = log_volatility(make_series([1.0, math.e, math.e**2]))
        assert [p.value for p in out.points] == [1.0, 1.0]

    def test_zero_close_rejected_with_date(self):
        with pytest.raises(NonpositivePriceError) as exc:
            log_volatility(make_series([10, 0, 12], start=D(2006, 1, 2)))
        assert exc.value.context["date"] == "2006-01-03"

    def test_kind_marker(self):
        assert log_volatility(make_series([1, 2])).kind is StepKind.LOG

    @given(closes=positive_closes)
    @settings(max_examples=60)
    def test_telescoping(self, closes):
        out = log_volatility(make_series(closes))
        total = sum(p.value for p in out.points)
        assert abs(total - math.log(closes[-1] / closes[0])) <= 1e-9

    @given(closes=positive_closes)
    @settings(max_examples=60)
    def test_sign_agreement_with_simple(self, closes):
        series = make_series(closes)
        simple = simple_volatility(series).points
        logv = log_volatility(series).points
        for s, l in zip(simple, logv):
            assert (s.value > 0) == (l.value > 0)
            assert (s.value == 0) == (l.value == 0)


class TestNormalizedVolatility:
    def test_hand_value(self):
        out = normalized_volatility(make_series([10, 12], [100, 50]))
        assert [p.value for p in out.steps.points] == [-0.4]
        assert out.skips == ()
        assert out.mode is ActivityMode.PRICE_TIMES_VOLUME

    def test_constant_activity(self):
        out = normalized_volatility(make_series([10, 10, 10], [5, 5, 5]))
        assert [p.value for p in out.steps.points] == [0.0, 0.0]

    def test_all_skipped_raises_with_records(self):
        with pytest.raises(AllStepsSkippedError) as exc:
            normalized_volatility(make_series([10, 12], [0, 50], start=D(2006, 1, 2)))
        skips = exc.value.skips
        assert len(skips) == 1
        assert skips[0].reason is SkipReason.ZERO_DENOMINATOR
        assert skips[0].date == D(2006, 1, 3)

    def test_fewer_than_two_bars_rejected(self):
        with pytest.raises(EmptySeriesError):
            normalized_volatility(make_series([10]))

    def test_skip_does_not_restart_chain(self):
        # the zero sits at t=1: pair (0,1) is valid, pair (1,2) skips
        out = normalized_volatility(make_series([10, 10, 10], [100, 0, 80]))
        assert [p.value for p in out.steps.points] == [-1.0]
        assert [s.reason for s in out.skips] == [SkipReason.ZERO_DENOMINATOR]
        # zero at t=0: pair (0,1) skips, pair (1,2) uses the true t=1 base
        out = normalized_volatility(make_series([10, 10, 10], [0, 100, 80]))
        assert [p.value for p in out.steps.points] == [-0.2]

    def test_undefined_activity_reason(self):
        # price/volume is undefined on the zero-volume middle bar, so both
        # pairs touching it are skipped with the UNDEFINED reason
        out = normalized_volatility(
            make_series([10, 10, 10, 10], [5, 0, 5, 10]), ActivityMode.PRICE_OVER_VOLUME
        )
        assert [s.reason for s in out.skips] == [
            SkipReason.UNDEFINED_ACTIVITY,
            SkipReason.UNDEFINED_ACTIVITY,
        ]
        assert [p.value for p in out.steps.points] == [-0.5]

    def test_all_undefined_raises(self):
        with pytest.raises(AllStepsSkippedError) as exc:
            normalized_volatility(
                make_series([10, 10], [0, 5]), ActivityMode.PRICE_OVER_VOLUME
            )
        assert exc.value.skips[0].reason is SkipReason.UNDEFINED_ACTIVITY

    def test_price_only_ignores_volumes(self):
        out = normalized_volatility(make_series([10, 12], [0, 0]), ActivityMode.PRICE_ONLY)
        assert [p.value for p in out.steps.points] == [0.2]

    def test_points_and_skips_dated_at_later_bar(self):
        out = normalized_volatility(
            make_series([10, 10, 10], [100, 0, 80], start=D(2006, 1, 2))
        )
        assert out.steps.points[0].date == D(2006, 1, 3)
        assert out.skips[0].date == D(2006, 1, 4)

    @given(closes=positive_closes, volumes=volumes_with_zeros)
    @settings(max_examples=60)
    def test_accounting_and_oracle(self, closes, volumes):
        n = min(len(closes), len(volumes))
        closes, volumes = closes[:n], volumes[:n]
        if n < 2:
            return
        series = make_series(closes, volumes)
        try:
            out = normalized_volatility(series)
        except AllStepsSkippedError as exc:
            assert len(exc.skips) == n - 1
            assert oracle_terms(closes, volumes) == []
            return
        assert out.n_valid + out.n_skipped == n - 1
        expected = oracle_terms(closes, volumes)
        assert list(out.values()) == expected

    @given(closes=positive_closes)
    @settings(max_examples=60)
    def test_lower_bound(self, closes):
        volumes = [1.0] * len(closes)
        out = normalized_volatility(make_series(closes, volumes))
        for point in out.steps.points:
            assert point.value >= -1.0

    def test_lower_bound_equality_iff_activity_hits_zero(self):
        out = normalized_volatility(make_series([10, 0, 10], [5, 5, 0]))
        # pair (0,1): activity 50 -> 0, term exactly -1; pair (1,2) skips
        assert [p.value for p in out.steps.points] == [-1.0]

    @given(
        closes=positive_closes,
        c=st.sampled_from([0.01, 1.0, 137.5]),
        d=st.sampled_from([0.01, 1.0, 137.5]),
    )
    @settings(max_examples=40)
    def test_scale_invariance(self, closes, c, d):
        volumes = [float(i + 1) for i in range(len(closes))]
        base = normalized_volatility(make_series(closes, volumes)).values()
        scaled = normalized_volatility(
            make_series([x * c for x in closes], [v * d for v in volumes])
        ).values()
        assert len(base) == len(scaled)
        for a, b in zip(base, scaled):
            assert math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-15)

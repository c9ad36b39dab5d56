"""Shared helpers: series builders, naive oracles, fixture paths."""

from __future__ import annotations

import datetime
import pathlib

import pytest

from marketentropy import InstrumentSeries, PriceBar

FIXTURES = pathlib.Path(__file__).resolve().parent / "fixtures"

ACCEPTANCE_RESULTS: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_RESULTS.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def make_series(
    closes,
    volumes=None,
    symbol: str = "TST",
    market: str = "XMKT",
    start: datetime.date = datetime.date(2006, 1, 2),
) -> InstrumentSeries:
    """Series with consecutive daily dates; volumes default to 1.0."""
    closes = list(closes)
    if volumes is None:
        volumes = [1.0] * len(closes)
    volumes = list(volumes)
    assert len(closes) == len(volumes)
    one_day = datetime.timedelta(days=1)
    bars = tuple(
        PriceBar(start + i * one_day, c, v)
        for i, (c, v) in enumerate(zip(closes, volumes))
    )
    return InstrumentSeries(symbol, market, bars)


def oracle_activities(closes, volumes, mode_name: str):
    """Transliterated activity values; None marks an undefined bar."""
    out = []
    for c, v in zip(closes, volumes):
        if mode_name == "pv":
            out.append(c * v)
        elif mode_name == "p_over_v":
            out.append(c / v if v != 0.0 else None)
        elif mode_name == "v_over_p":
            out.append(v / c if c != 0.0 else None)
        elif mode_name == "p_only":
            out.append(c)
        else:
            raise AssertionError(mode_name)
    return out


def oracle_terms(closes, volumes, mode_name: str = "pv"):
    """Valid normalized-volatility terms, naive transliteration."""
    acts = oracle_activities(closes, volumes, mode_name)
    terms = []
    for prev, cur in zip(acts, acts[1:]):
        if prev is None or cur is None or prev == 0.0:
            continue
        terms.append((cur - prev) / prev)
    return terms


def oracle_p_m(closes, volumes, mode_name: str = "pv", absolute: bool = False):
    """Naive mean of the transliterated terms; None when no term exists."""
    terms = oracle_terms(closes, volumes, mode_name)
    if absolute:
        terms = [abs(t) for t in terms]
    if not terms:
        return None
    return sum(terms) / len(terms)


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES

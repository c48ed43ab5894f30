import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from tptri import CoefficientSpec, TriMatrix  # noqa: E402

small = st.one_of(
    st.integers(0, 4).map(Fraction),
    st.sampled_from([Fraction(1, 2), Fraction(3, 2), Fraction(2, 3)]),
)


@st.composite
def coefficient_specs(draw, N, values=small):
    """Explicit-list specs with enough terms for order N and criteria up to N."""
    r = draw(st.lists(values, min_size=N + 2, max_size=N + 2))
    s = draw(st.lists(values, min_size=N + 2, max_size=N + 2))
    t = draw(st.lists(values, min_size=N + 2, max_size=N + 2))
    return CoefficientSpec.of(r, s, t)


@st.composite
def tridiagonals(draw, max_order=6, values=small):
    n = draw(st.integers(0, max_order - 1))
    diag = draw(st.lists(values, min_size=n + 1, max_size=n + 1))
    sup = draw(st.lists(values, min_size=n, max_size=n))
    sub = draw(st.lists(values, min_size=n, max_size=n))
    return TriMatrix(diag, sup, sub)


# -- acceptance summary ------------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _ACCEPTANCE.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")

import pytest
from hypothesis import settings

from gammaspin.constants import CODATA_2018, PhysicalConstants

settings.register_profile("default", max_examples=40, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile("default")

_criteria = {}


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite CLI golden files")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


@pytest.fixture
def k():
    return CODATA_2018


@pytest.fixture
def synthetic():
    return PhysicalConstants.from_hbar(e=2.0, hbar=2.0, m0=1.0, c=3.0)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, text in getattr(report, "criteria", ()):
        ok = report.passed and _criteria.get(key, (None, True))[1]
        _criteria[key] = (text, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criteria = [(m.args[0], m.args[1]) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        text, ok = _criteria[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key:>2}: {text}")

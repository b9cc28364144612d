import pytest
from hypothesis import HealthCheck, settings

from srcodes.codes import make_constant, make_rs
from srcodes.srdec import SrCode

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

W, W2 = 2, 3


@pytest.fixture(scope="session")
def rs42():
    return make_rs((0, 1, W, W2), 2)


@pytest.fixture(scope="session")
def const4():
    return make_constant(4)


@pytest.fixture(scope="session")
def example_pair(rs42, const4):
    return SrCode.build(rs42, const4)


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    if rep.when == "call" or rep.failed:
        _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, secs = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}  ({secs:.3f} s)")

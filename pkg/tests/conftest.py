import numpy as np
import pytest

from fasthough import analysis

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full n <= 4096 sweeps (deselect with -m 'not slow')")
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when == "setup" and report.skipped or report.when == "call":
        marker = _criterion_of.get(report.nodeid)
        if marker is not None:
            number, title = marker
            if report.skipped:
                status = "SKIP"
            else:
                status = "PASS" if report.passed else "FAIL"
            _criteria.setdefault(number, []).append((title, status, report.nodeid))


_criterion_of = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_of[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        for title, status, nodeid in _criteria[number]:
            name = nodeid.rsplit("::", 1)[-1]
            terminalreporter.write_line(f"AC{number:02d} {status:4s} {title} [{name}]")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def full_error_sweep():
    """Exact E_S(n), E_T(n) for every n <= 4096 (about a minute)."""
    return {n: analysis.error_record(n) for n in range(1, 4097)}

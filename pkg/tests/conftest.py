import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from snrmaps.snr import SnrParams, build_lattice


@lru_cache(maxsize=None)
def lattice(n, r):
    return build_lattice(SnrParams(n, r))


@pytest.fixture
def s32():
    return lattice(3, 2)


@pytest.fixture
def s53():
    return lattice(5, 3)


@pytest.fixture
def s52():
    return lattice(5, 2)


@pytest.fixture
def s63():
    return lattice(6, 3)


# one pass/fail line per acceptance criterion, printed after the run

_ACCEPTANCE: dict[str, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test belongs to")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = _ACCEPTANCE_LABELS.get(report.nodeid)
    if label is not None:
        _ACCEPTANCE.setdefault(label, []).append(report.passed)


_ACCEPTANCE_LABELS: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _ACCEPTANCE_LABELS[item.nodeid] = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: (int(s.split()[0]), s)):
        ok = all(_ACCEPTANCE[label])
        terminalreporter.write_line(f"criterion {label}: {'PASS' if ok else 'FAIL'}")

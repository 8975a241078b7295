import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    monkeypatch.setenv("RESATLAS_CACHE", str(tmp_path_factory.getbasetemp() / "cache"))
    yield


_ACCEPTANCE: dict[int, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    n = int(name.split("_")[2])
    if report.when == "call":
        _ACCEPTANCE[n] = ("PASS" if report.passed else "FAIL", report.duration)
    elif report.failed:
        _ACCEPTANCE[n] = ("FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, secs = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status} ({secs:.2f} s)")

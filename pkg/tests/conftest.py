import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run long searches marked slow (also enabled by TROPID_RUNSLOW=1)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number): acceptance criterion reported in the summary")
    config._criterion_lines = {}


def _runslow(config):
    return config.getoption("--runslow") or os.environ.get("TROPID_RUNSLOW") == "1"


def pytest_collection_modifyitems(config, items):
    if _runslow(config):
        return
    skip = pytest.mark.skip(reason="long-running; use --runslow or TROPID_RUNSLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def verdict(request):
    """Free-form detail for the criterion line; ``status`` overrides pass/fail."""
    info = {"detail": "", "status": None}
    request.node._verdict = info
    return info


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        info = getattr(item, "_verdict", {"detail": "", "status": None})
        if rep.skipped:
            status = "SKIP"
        elif info["status"]:
            status = info["status"]
        else:
            status = "PASS" if rep.passed else "FAIL"
        line = f"criterion {marker.args[0]:>2}: {status}"
        if info["detail"]:
            line += f"  {info['detail']}"
        item.config._criterion_lines[marker.args[0]] = line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(lines):
        terminalreporter.write_line(lines[k])

import time

import pytest

_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_KEY] = []


@pytest.fixture
def criterion(request):
    """Time a block, enforce its limit, and log one PASS/FAIL line."""
    lines = request.config.stash[_KEY]

    class Recorder:
        def __init__(self):
            self.name = None
            self.limit = None
            self.detail = ""

        def start(self, name, limit_s):
            self.name, self.limit = name, limit_s
            self.t0 = time.perf_counter()

    rec = Recorder()
    yield rec
    if rec.name is None:
        return
    elapsed = time.perf_counter() - rec.t0
    failed = getattr(request.node, "_outcome_failed", False) or elapsed > rec.limit
    status = "FAIL" if failed else "PASS"
    line = f"{status} {rec.name} ({elapsed:.1f}s, limit {rec.limit}s){' ' + rec.detail if rec.detail else ''}"
    print("\n" + line)
    lines.append(line)
    assert elapsed <= rec.limit, f"{rec.name} took {elapsed:.1f}s, limit {rec.limit}s"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and report.failed:
        item._outcome_failed = True


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_KEY]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

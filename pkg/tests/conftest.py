import pytest

_RESULTS = {}


class Checks:
    """Collects named sub-checks so a failing criterion still reports every measurement."""

    def __init__(self):
        self.items = []

    def check(self, label, ok, detail=""):
        self.items.append((label, bool(ok), detail))
        return ok

    def lines(self):
        return [f"{'ok  ' if ok else 'FAIL'} {label}: {detail}" for label, ok, detail in self.items]

    def verify(self):
        bad = [line for line in self.lines() if line.startswith("FAIL")]
        assert not bad, "\n".join(bad)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.fixture
def checks(request):
    c = Checks()
    yield c
    request.node.user_properties.append(("checks", c.lines()))


def pytest_runtest_logreport(report):
    mark = next((v for k, v in report.user_properties if k == "criterion"), None)
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _RESULTS[mark] = [report.outcome, []]
    elif report.when == "teardown" and mark in _RESULTS:
        _RESULTS[mark][1] = next((v for k, v in report.user_properties if k == "checks"), [])


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (num, title), (outcome, lines) in sorted(_RESULTS.items()):
        tr.write_line(f"criterion {num:2d} {'PASS' if outcome == 'passed' else 'FAIL'}  {title}")
        for line in lines:
            tr.write_line(f"      {line}")

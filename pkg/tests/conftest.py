import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (ok, detail) at the end of the test."""
    label = request.node.get_closest_marker("criterion").args[0]

    def record(ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} [{label}] {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        return ok

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion id")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)

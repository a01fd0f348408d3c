import pytest

CRITERIA: list[tuple[str, str, bool]] = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed in the summary."""
    marker = request.node.get_closest_marker("criterion")
    label, title = marker.args
    state = {"ok": False}
    yield state
    CRITERIA.append((label, title, state["ok"]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, title, ok in sorted(CRITERIA, key=lambda c: int(c[0][2:])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {title}")

import pytest

_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line per criterion, keyed by the test's marker label."""
    label = request.node.get_closest_marker("criterion").args[0]

    def record(ok: bool, detail: str = ""):
        _RESULTS[label] = (bool(ok), detail)

    yield record
    if label not in _RESULTS:
        _RESULTS[label] = (False, "no result recorded")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call" or call.excinfo is None:
        return
    label = marker.args[0]
    _RESULTS[label] = (False, str(call.excinfo.value).splitlines()[0][:200])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = _RESULTS[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())

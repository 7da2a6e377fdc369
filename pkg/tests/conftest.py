import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion line; the summary prints all of them."""
    entry = {"name": request.node.name, "status": "FAIL", "detail": ""}
    _ACCEPTANCE.append(entry)

    def passed(detail):
        entry["status"] = "PASS"
        entry["detail"] = detail

    def note(detail):
        entry["detail"] = detail

    passed.note = note
    yield passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE:
        terminalreporter.write_line(f"{entry['status']}  {entry['name']}  {entry['detail']}")

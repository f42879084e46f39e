import pytest

# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES = {}


def record(label: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES[label] = f"criterion {label}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.fixture
def acceptance():
    return record


def pytest_collection_modifyitems(items):
    for item in items:
        fn = getattr(item, "function", None)
        if fn is not None and getattr(fn, "is_hypothesis_test", False):
            item.add_marker(pytest.mark.property)


def _order(label: str):
    head = label.split("-")[0]
    return (int(head), label)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_LINES, key=_order):
        terminalreporter.write_line(ACCEPTANCE_LINES[label])

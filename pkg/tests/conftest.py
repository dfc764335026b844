import pytest

_ACCEPTANCE: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary."""

    class Recorder:
        def __call__(self, number, title, ok, detail=""):
            _ACCEPTANCE.append((number, title, bool(ok), detail))
            assert ok, f"criterion {number} ({title}) failed: {detail}"

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} {detail}".rstrip())

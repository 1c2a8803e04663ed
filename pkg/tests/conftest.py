import sys


def pytest_terminal_summary(terminalreporter):
    """Replay the acceptance-gate criterion lines after capture ends."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for _, msg in sorted(results):
        terminalreporter.write_line(msg)

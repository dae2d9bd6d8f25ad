import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            when = getattr(report, "when", "call")
            if when not in ("call", "collect"):
                continue
            match = _CRITERION.search(report.nodeid)
            if match:
                number = int(match.group(1))
                name = match.group(2)
                results[number] = (name, outcome == "passed")
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        name, ok = results[number]
        terminalreporter.write_line(
            f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}")

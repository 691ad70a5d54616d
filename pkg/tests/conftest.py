"""Aggregates acceptance-criterion outcomes into one line per criterion."""

import re
from collections import defaultdict

_CRITERION_RE = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION_RE.search(report.nodeid)
    if m:
        _outcomes[int(m.group(1))].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for crit in sorted(_outcomes):
        results = _outcomes[crit]
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {crit}: {verdict} "
            f"({sum(results)}/{len(results)} checks passed)"
        )

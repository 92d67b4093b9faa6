import pytest

import graphs

ACCEPTANCE_FILE = "test_acceptance.py"


@pytest.fixture
def k33():
    return graphs.k33()


@pytest.fixture
def fig2():
    return graphs.two_top_three_bottom()


def pytest_terminal_summary(terminalreporter):
    reports = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", "call") != "call" and key != "error":
                continue
            if ACCEPTANCE_FILE in rep.nodeid and "::test_criterion_" in rep.nodeid:
                reports.append(rep)
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(reports, key=lambda r: r.nodeid):
        name = rep.nodeid.split("::test_criterion_", 1)[1]
        num, _, label = name.partition("_")
        verdict = "PASS" if rep.passed else "FAIL"
        extra = "; ".join(f"{k}={v}" for k, v in rep.user_properties)
        line = f"criterion {int(num):2d} {verdict}  {label}"
        terminalreporter.write_line(line + (f"  [{extra}]" if extra else ""))

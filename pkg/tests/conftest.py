import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("ci")

_criteria: dict[int, list[str]] = {}
_titles: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)_(\w+?)(\[.*\])?$", report.nodeid)
    if not m or report.when not in ("setup", "call"):
        return
    if report.when == "setup" and report.passed:
        return
    k = int(m.group(1))
    _titles.setdefault(k, m.group(2).replace("_", " "))
    _criteria.setdefault(k, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        outcomes = _criteria[k]
        ok = all(o == "passed" for o in outcomes)
        detail = f"{outcomes.count('passed')}/{len(outcomes)} cases"
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {_titles[k]}  ({detail})")

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "H^{13,12} vanishing at (7,4) with its basis, duals and differentials",
    2: "generator degree table at (7,4)",
    3: "H^{9,8} = 0 at (5,3)",
    4: "vanishing sweep at (5,3), (7,4), (11,4)",
    5: "E2 survivors in degrees q, q+1 at (5,3)",
    6: "top cohomology at (5,3) and (7,4)",
    7: "algebraic property suite",
    8: "arithmetic suite",
}

_outcomes: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(mark.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(CRITERIA):
        runs = _outcomes.get(k)
        if not runs:
            tr.write_line(f"[ -- ] {k}. {CRITERIA[k]} (not run)")
            continue
        failed = [name for name, ok in runs if not ok]
        status = "FAIL" if failed else "PASS"
        extra = f"  failing: {', '.join(failed)}" if failed else ""
        tr.write_line(f"[{status}] {k}. {CRITERIA[k]} ({len(runs) - len(failed)}/{len(runs)}){extra}")

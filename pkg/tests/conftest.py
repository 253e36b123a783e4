import pytest

ACCEPTANCE_KEY = pytest.StashKey[dict]()

CRITERIA = {
    1: "soundness sweep, connected n=3..6",
    2: "strictness of the strict bounds on the sweep",
    3: "equality at stars and complete graphs, complete-graph closed form",
    4: "eigenvalue product identities",
    5: "lemma suite and its equality cases",
    6: "Matrix-Tree counts vs deletion-contraction",
    7: "scalar mean inequalities, randomized",
    8: "graph6 round trip and fixed vectors",
    9: "enumeration output independent of worker count",
}


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = {}


@pytest.fixture
def criterion(request):
    """``criterion(number, label, ok, detail="")`` records one acceptance sub-check."""
    log = request.config.stash[ACCEPTANCE_KEY]

    def record(number, label, ok, detail=""):
        log.setdefault(number, []).append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(ACCEPTANCE_KEY, {})
    if not log:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(CRITERIA):
        checks = log.get(number)
        if not checks:
            tr.write_line(f"criterion {number}: NOT RUN  {CRITERIA[number]}")
            continue
        failed = [c for c in checks if not c[1]]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {number}: {status}  {CRITERIA[number]} "
                      f"({len(checks) - len(failed)}/{len(checks)} checks)")
        for label, _, detail in failed:
            tr.write_line(f"    failed: {label}: {detail}")

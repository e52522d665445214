import pytest

ACCEPTANCE_PREFIX = "test_acceptance.py::test_criterion_"


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        item.config.stash.setdefault(_RESULTS, {})[item.nodeid] = (rep.outcome, doc)


_RESULTS = pytest.StashKey[dict]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, {})
    rows = [(nid, out, doc) for nid, (out, doc) in results.items() if ACCEPTANCE_PREFIX in nid]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for nid, out, doc in sorted(rows, key=lambda r: int(r[0].split(ACCEPTANCE_PREFIX)[1].split("_")[0])):
        terminalreporter.write_line(f"{'PASS' if out == 'passed' else 'FAIL'}  {doc}")

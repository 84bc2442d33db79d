import pytest

from graphactors.samples import backward_family, chain_graph, forward_family, parallel_graph


@pytest.fixture
def g1():
    return chain_graph()


@pytest.fixture
def g2():
    return parallel_graph()


@pytest.fixture
def fwd(g1, g2):
    return forward_family(g1, g2)


@pytest.fixture
def bwd(g1, g2):
    return backward_family(g1, g2)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion."""
    state = {}

    def record(label: str, detail: str = ""):
        state["label"], state["detail"] = label, detail

    yield record
    if "label" in state:
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {state['label']}  {state['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

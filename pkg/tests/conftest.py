import pytest

_criteria: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion under ``name``."""
    names: list[str] = []

    def register(name: str) -> None:
        names.append(name)

    yield register
    rep = getattr(request.node, "rep_call", None)
    outcome = "PASS" if rep is not None and rep.passed else "FAIL"
    for name in names:
        _criteria[name] = outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria.items():
        terminalreporter.write_line(f"{outcome}  {name}")

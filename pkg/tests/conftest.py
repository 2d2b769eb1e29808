import pytest

from heawood.enumeration import connected_graphs

# acceptance outcomes, filled in by test_acceptance and echoed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def graphs_upto():
    def get(n_max, n_min=1):
        return [g for n in range(n_min, n_max + 1) for g in connected_graphs(n)]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")

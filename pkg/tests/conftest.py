import pytest

from enriques.corpus import phi_corpus

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return phi_corpus()


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""
    def emit(number, title, ok, seconds, limit=None, detail=""):
        budget = "" if limit is None else f" (limit {limit:g}s)"
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} in {seconds:.2f}s{budget}"
        if detail:
            line += f"; {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)

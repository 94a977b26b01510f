from itertools import combinations

from edge_expand import new_graph

# verdict lines recorded by the acceptance tests, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def complete_graph(n):
    return new_graph(n, list(combinations(range(n), 2)))


def cycle_graph(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return new_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

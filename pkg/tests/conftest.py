import itertools

import pytest
from hypothesis import strategies as st

from pgroupoids import CayleyTable, denes_keedwell
from pgroupoids.golden import golden_table, order9_cycles

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def dk5():
    return denes_keedwell(5)


@pytest.fixture(scope="session")
def k5_table():
    return golden_table("k5_dihedral")


@pytest.fixture(scope="session")
def not_quandle5():
    return golden_table("order5_not_quandle")


@pytest.fixture(scope="session")
def ham9():
    return golden_table("order9_hamiltonian")


@pytest.fixture(scope="session")
def ham9_cycles():
    return order9_cycles()


# -- independent helpers (deliberately not using the package's search) -------


def fixed_point_free_involutions(points):
    """All perfect matchings of ``points`` as lists of pairs."""
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        for m in fixed_point_free_involutions(points[1:i] + points[i + 1 :]):
            yield [(a, points[i])] + m


def all_p_groupoids(n):
    """Every labeled P-groupoid of order n, built column by column from matchings."""
    cols = []
    for y in range(n):
        options = []
        for m in fixed_point_free_involutions([v for v in range(n) if v != y]):
            col = [y] * n
            for a, b in m:
                col[a], col[b] = b, a
            options.append(col)
        cols.append(options)
    for choice in itertools.product(*cols):
        yield CayleyTable.from_rows([[choice[y][x] for y in range(n)] for x in range(n)])


@st.composite
def p_groupoids(draw, orders=(3, 5, 7, 9)):
    n = draw(st.sampled_from(orders))
    rows = [[x if x == y else -1 for y in range(n)] for x in range(n)]
    for y in range(n):
        rest = [v for v in range(n) if v != y]
        rest = draw(st.permutations(rest))
        for a, b in zip(rest[::2], rest[1::2]):
            rows[a][y], rows[b][y] = b, a
    return CayleyTable.from_rows(rows)


@st.composite
def tables(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                          min_size=n, max_size=n))
    return CayleyTable.from_rows(cells)


@st.composite
def relabelings(draw, n):
    return draw(st.permutations(list(range(n))))

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tropeig import EPS, TropMatrix

EXAMPLE_ROWS = [[3, 1, 3, 5], [2, 0, 0, 0], [-3, 0, 0, 2], [4, 1, 3, 5]]

# one entry flipped: a_31 = 3 instead of -3
EXAMPLE_ROWS_A31_POSITIVE = [[3, 1, 3, 5], [2, 0, 0, 0], [3, 0, 0, 2], [4, 1, 3, 5]]


@pytest.fixture
def example_matrix():
    return TropMatrix(EXAMPLE_ROWS)


finite = st.builds(Fraction, st.integers(-20, 20), st.sampled_from([1, 2, 3, 4, 6]))
scalars = st.one_of(finite, finite, finite, st.just(EPS))


@st.composite
def matrices(draw, min_n=1, max_n=5, elements=scalars):
    n = draw(st.integers(min_n, max_n))
    return TropMatrix(draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)))


ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split(".")[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")

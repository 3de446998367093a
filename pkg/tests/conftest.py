from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from eala.matrix import Matrix2
from eala.scalars import Scalar
from eala.torus import TorusElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(Scalar, small_fractions, small_fractions)
rational_scalars = st.builds(Scalar, small_fractions)
degrees = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
torus_elements = st.dictionaries(degrees, scalars, max_size=3).map(TorusElement)


def _sl2(entries):
    a, b, c, d = entries
    fix = (a + d).even_even_part()
    return Matrix2([[a, b], [c, d - fix]])


matrices = st.tuples(*[torus_elements] * 4).map(lambda e: Matrix2([[e[0], e[1]], [e[2], e[3]]]))
sl2_matrices = st.tuples(*[torus_elements] * 4).map(_sl2)


@pytest.fixture
def half():
    return Scalar(Fraction(1, 2))


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

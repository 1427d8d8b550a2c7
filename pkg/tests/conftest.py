from fractions import Fraction

import pytest
from hypothesis import strategies as st

from orbitquant import HPoly, Poly, sl2, sl3, so3
from orbitquant.poly import monomials

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def L():
    return sl2()


@pytest.fixture(scope="session")
def L3():
    return sl3()


@pytest.fixture(scope="session")
def S3():
    return so3()


@pytest.fixture(scope="session")
def x(L):
    """sl2 coordinate functions xH, xX, xY."""
    return tuple(L.var(i) for i in range(3))


def monos(n, d_max):
    return [Poly.monomial(e) for d in range(d_max + 1) for e in monomials(n, d)]


small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))

hpolys = st.lists(small_rationals, max_size=4).map(HPoly)


def polys(n=3, max_degree=3, h=False, max_terms=4):
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(
        lambda e: sum(e) <= max_degree
    ).map(tuple)
    coeffs = hpolys if h else small_rationals
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: Poly(n, t))

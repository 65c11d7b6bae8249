"""Shared fixtures.  The two T=200 point sets are expensive (tens of
seconds each) and session-scoped; everything heavy funnels through them."""

import pytest

from symzeta.locator import locate_apoints
from symzeta.reports import counting_rectangle
from symzeta.symmetric import TargetValue, make_sym_zeta


@pytest.fixture(scope="session")
def z11():
    return make_sym_zeta((1.0, 1.0))


@pytest.fixture(scope="session")
def z21():
    return make_sym_zeta((2.0, 1.0))


@pytest.fixture(scope="session")
def z111():
    return make_sym_zeta((1.0, 1.0, 1.0))


@pytest.fixture(scope="session")
def a_zero():
    return TargetValue(0)


@pytest.fixture(scope="session")
def located_11(z11, a_zero):
    """(rectangle, points) for w=(1,1), a=0, window y=5, heights to 200."""
    rect = counting_rectangle(z11, a_zero, 5.0, 200.0)
    return rect, locate_apoints(z11, a_zero, rect)


@pytest.fixture(scope="session")
def located_21(z21, a_zero):
    """(rectangle, points) for w=(2,1), a=0, window y=2, heights to 200."""
    rect = counting_rectangle(z21, a_zero, 2.0, 200.0)
    return rect, locate_apoints(z21, a_zero, rect)

import pytest

from hopfcheck import constructors as cons
from hopfcheck.fields import make_field


@pytest.fixture(scope="session")
def f3():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def f5():
    return make_field(5, 4)


@pytest.fixture(scope="session")
def f52():
    return make_field(5, 2)


@pytest.fixture(scope="session")
def f7():
    return make_field(7, 3)


@pytest.fixture(scope="session")
def f76():
    return make_field(7, 6)


@pytest.fixture(scope="session")
def fq():
    return make_field("Q", 2)


@pytest.fixture(scope="session")
def kz2(f5):
    return cons.group_algebra(2, f5)


@pytest.fixture(scope="session")
def taft2(f5):
    return cons.taft(2, f5)


@pytest.fixture(scope="session")
def taft3(f7):
    return cons.taft(3, f7)


@pytest.fixture(scope="session")
def sweedler(f52):
    return cons.family_hopf(1, 1, (1,), f52)


@pytest.fixture(scope="session")
def ext11(f52):
    """Exterior factor of H(1,1) over F_5: (base kZ_2, braided B)."""
    return cons.exterior_factor(1, 1, (1,), f52)

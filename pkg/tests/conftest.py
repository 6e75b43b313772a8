import mpmath as mp
import pytest

from latsum import PrecisionContext, hexagonal, make_lattice, square


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionContext(50)


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)


@pytest.fixture(scope="session")
def sq():
    return square()


@pytest.fixture(scope="session")
def hx():
    return hexagonal()


@pytest.fixture(scope="session")
def stretched():
    with mp.workdps(70):
        return make_lattice(mp.mpc(0, mp.sqrt(2)))

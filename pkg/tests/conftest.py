import pytest

from innerlie import catalog


@pytest.fixture(scope="session")
def catalog8():
    return catalog(8)


@pytest.fixture(scope="session")
def small_pairs(catalog8):
    return [pair for pair in catalog8 if pair.rank <= 4]

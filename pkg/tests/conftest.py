import pytest

from secgenus.suites import get_catalog


@pytest.fixture(scope="session")
def catalog():
    return get_catalog()


@pytest.fixture(scope="session")
def p4(catalog):
    return catalog["P4"]


@pytest.fixture(scope="session")
def x6(catalog):
    return catalog["X6"]


@pytest.fixture(scope="session")
def a4(catalog):
    return catalog["A4"]


@pytest.fixture(scope="session")
def p1xp3(catalog):
    return catalog["P1xP3"]

import pytest

from stfom import embedded_catalog, evaluate_catalog


@pytest.fixture(scope="session")
def catalog():
    return embedded_catalog()


@pytest.fixture(scope="session")
def results(catalog):
    return evaluate_catalog(catalog)

import pytest

from frobring.catalog import STANDARD_CATALOG
from frobring.construct import build_ring


@pytest.fixture(scope="session")
def catalog():
    """All standard catalog rings, built once."""
    return [(name, build_ring(expr)) for name, expr in STANDARD_CATALOG]


@pytest.fixture(scope="session")
def catalog_by_name(catalog):
    return dict(catalog)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="run the long exhaustive searches outside acceptance")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="use --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

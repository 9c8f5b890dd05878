import pytest

from searchorder.inventory import connected_graphs_upto


@pytest.fixture(scope="session")
def graphs_upto_5():
    return connected_graphs_upto(5)


@pytest.fixture(scope="session")
def graphs_upto_6():
    return connected_graphs_upto(6)


@pytest.fixture(scope="session")
def graphs_upto_7():
    return connected_graphs_upto(7)

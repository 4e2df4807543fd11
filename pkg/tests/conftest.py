import pytest

from cogex.cotree import clique, edgeless, make_leaf, make_product, make_sum


@pytest.fixture(scope="session")
def k1():
    return make_leaf()


@pytest.fixture(scope="session")
def e2():
    return edgeless(2)


@pytest.fixture(scope="session")
def c4():
    return make_product([edgeless(2), edgeless(2)])


@pytest.fixture(scope="session")
def k3():
    return clique(3)


@pytest.fixture(scope="session")
def p3():
    return make_product([make_leaf(), edgeless(2)])


@pytest.fixture(scope="session")
def k2_join_two_triangles():
    return make_product([clique(2), make_sum([clique(3), clique(3)])])

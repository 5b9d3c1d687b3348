import pytest

import galois_moebius as gm


@pytest.fixture(scope="session")
def t212():
    return gm.build_tower(2, 1, 2)


@pytest.fixture(scope="session")
def t312():
    return gm.build_tower(3, 1, 2)


@pytest.fixture(scope="session")
def t222():
    return gm.build_tower(2, 2, 2)


@pytest.fixture(scope="session")
def t214():
    return gm.build_tower(2, 1, 4)

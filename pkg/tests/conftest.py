import pytest

from congform import corpus


@pytest.fixture(scope="session")
def group_corpus():
    return corpus("groups", 8)


@pytest.fixture(scope="session")
def rng_corpus():
    return corpus("rngs", 12)


@pytest.fixture(scope="session")
def quandle_corpus():
    return corpus("quandles", 3)

import pytest

from sextic19.database import load_corpus


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def by_id(corpus):
    return {r.id: r for r in corpus}

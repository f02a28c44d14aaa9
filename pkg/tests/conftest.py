import pytest

from kostka import build_context


@pytest.fixture(scope="session")
def ctx3():
    return build_context(3)


@pytest.fixture(scope="session")
def ctx5():
    return build_context(5)

import pytest

from weylorbit.rootsys import build_algebra


@pytest.fixture(scope="session")
def g2():
    return build_algebra("G2")


@pytest.fixture(scope="session")
def a2():
    return build_algebra("A2")


@pytest.fixture(scope="session")
def a1():
    return build_algebra("A1")

import pytest

from ssv import Context


@pytest.fixture
def ctx2():
    return Context(2)


@pytest.fixture
def ctx3():
    return Context(3)

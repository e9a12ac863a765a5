import pytest

from heartlab.zoo import GroupId, build_group


@pytest.fixture(scope="session")
def m11():
    return build_group(GroupId("mathieu", (11,)))


@pytest.fixture(scope="session")
def m12():
    return build_group(GroupId("mathieu", (12,)))


@pytest.fixture(scope="session")
def psl32():
    return build_group(GroupId("psl", (3, 2)))


@pytest.fixture(scope="session")
def s5():
    return build_group(GroupId("symmetric", (5,)))


@pytest.fixture(scope="session")
def a5():
    return build_group(GroupId("alternating", (5,)))

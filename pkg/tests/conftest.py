import pytest

from paritysg.graphs import FamilySpec, generate


@pytest.fixture
def k4():
    return generate(FamilySpec("complete", 4))


@pytest.fixture
def p4():
    return generate(FamilySpec("path", 4))


@pytest.fixture
def p3():
    return generate(FamilySpec("path", 3))


@pytest.fixture
def star4():
    return generate(FamilySpec("star", 4))


@pytest.fixture
def p2i3():
    return generate(FamilySpec("join_p2_independent", 5))

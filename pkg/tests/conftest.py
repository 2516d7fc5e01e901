import pytest

from raagnorm import Character, FlagComplex, two_triangles


@pytest.fixture
def p3():
    return FlagComplex(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def k3():
    return FlagComplex(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])


@pytest.fixture
def c4():
    return FlagComplex(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])


@pytest.fixture
def star3():
    return FlagComplex(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])


@pytest.fixture
def tt():
    return two_triangles()


@pytest.fixture
def phi111():
    return Character({"a": 1, "b": 1, "c": 1})


@pytest.fixture
def phi101():
    return Character({"a": 1, "b": 0, "c": 1})

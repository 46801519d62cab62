import numpy as np
import pytest

from stretchkit.convex.polytope import cube, square
from stretchkit.convex.poset import square_poset, stadium_poset


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def cube3():
    return cube(3)


@pytest.fixture
def unit_square():
    "[0, 2]², with the origin at a vertex"
    return square(2)


@pytest.fixture
def stadium():
    return stadium_poset()


@pytest.fixture
def square_boundary():
    return square_poset()

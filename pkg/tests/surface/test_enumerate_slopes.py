import pytest

from stretchkit.exceptions import DomainError
from stretchkit.surface.torus import Slope, enumerate_slopes, intersection_number


def test_depth_zero():
    "Depth 0 is the two basis curves"
    assert enumerate_slopes(0) == [Slope(0, 1), Slope(1, 0)]


def test_depth_one():
    "One mediant step on each side"
    assert set(enumerate_slopes(1)) == {Slope(0, 1), Slope(1, 0), Slope(1, 1), Slope(-1, 1)}


@pytest.mark.parametrize('depth', range(8))
def test_count(depth):
    "Each depth doubles the number of slopes"
    slopes = enumerate_slopes(depth)
    assert len(slopes) == 2 ** (depth + 1)
    assert len(set(slopes)) == len(slopes)
    assert slopes == sorted(slopes)


def test_nested():
    "Deeper enumerations extend shallower ones"
    assert set(enumerate_slopes(3)) <= set(enumerate_slopes(4))


def test_farey_neighbours():
    "The new slopes at depth 2 are mediants of Farey neighbours"
    new = set(enumerate_slopes(2)) - set(enumerate_slopes(1))
    assert new == {Slope(1, 2), Slope(2, 1), Slope(-1, 2), Slope(-2, 1)}
    assert intersection_number(Slope(1, 2), Slope(0, 1)) == 1


def test_negative_depth():
    "Depths are non-negative"
    with pytest.raises(DomainError):
        enumerate_slopes(-1)

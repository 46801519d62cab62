from fractions import Fraction

import numpy as np
import pytest

from stretchkit.convex import exact
from stretchkit.exceptions import DomainError


def test_to_fraction():
    "Strings, ints and floats convert exactly"
    assert exact.to_fraction('3/4') == Fraction(3, 4)
    assert exact.to_fraction(' 0.25 ') == Fraction(1, 4)
    assert exact.to_fraction(2) == Fraction(2)
    assert exact.to_fraction(0.5) == Fraction(1, 2)


def test_to_fraction_bad_string():
    "Text that isn't a rational is rejected"
    with pytest.raises(DomainError, match=r"rational = 'abc'"):
        exact.to_fraction('abc')


def test_exact_rational():
    "Floats snap to the nearest rational of bounded denominator"
    assert exact.exact_rational(1 / 3) == Fraction(1, 3)
    assert exact.exact_rational(0.1 + 0.2) == Fraction(3, 10)


def test_exact_rational_precision():
    "The precision must be small"
    with pytest.raises(DomainError):
        exact.exact_rational(0.5, precision=0.1)
    with pytest.raises(DomainError):
        exact.exact_rational(0.5, precision=0)


def test_rank():
    "Ranks and affine ranks"
    assert exact.rank([exact.vector((1, 2)), exact.vector((2, 4))]) == 1
    assert exact.affine_rank([exact.vector(p) for p in ((0, 0), (1, 1), (2, 2))]) == 1
    assert exact.affine_rank([exact.vector(p) for p in ((0, 0), (1, 0), (0, 1))]) == 2


def test_primitive():
    "Rational vectors scale to coprime integers"
    assert exact.primitive(exact.vector(('1/2', '1/3'))) == (3, 2)
    assert exact.primitive(exact.vector((-4, 6))) == (-2, 3)


def test_hyperplane_through():
    "The line through two points of the plane"
    normal, offset = exact.hyperplane_through([exact.vector((0, 1)), exact.vector((1, 2))])
    assert abs(normal[0]) == abs(normal[1]) == 1
    assert exact.dot(normal, exact.vector((3, 4))) == offset
    assert exact.dot(normal, exact.vector((0, 0))) != offset


def test_hyperplane_through_dependent():
    "Affinely dependent points span no hyperplane"
    points = [exact.vector(p) for p in ((0, 0, 0), (1, 1, 1), (2, 2, 2))]
    assert exact.hyperplane_through(points) is None


def test_determinant():
    "Determinants, with row swaps"
    assert exact.determinant([[1, 2], [3, 4]]) == -2
    assert exact.determinant([[0, 1], [1, 0]]) == -1
    assert exact.determinant([[1, 2], [2, 4]]) == 0


def test_random_invertible():
    "Random matrices are invertible and reproducible"
    first = exact.random_invertible(np.random.default_rng(7), 3)
    second = exact.random_invertible(np.random.default_rng(7), 3)
    assert first == second
    assert exact.determinant(first) != 0

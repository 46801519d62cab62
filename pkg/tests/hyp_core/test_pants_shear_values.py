import pytest

from stretchkit.exceptions import DomainError
from stretchkit.hyp_core import pants_shear_values


def test_arithmetic():
    "The four candidate shears are half sums with signs"
    assert pants_shear_values(2, 1, 1) == (2.0, 0.0, 1.0, 1.0)
    assert pants_shear_values(10, 3, 4) == (8.5, 1.5, 5.5, 4.5)


def test_cusped_pants():
    "With two cusps all candidates agree"
    assert pants_shear_values(3.0, 0, 0) == (1.5, 1.5, 1.5, 1.5)


def test_negative_length():
    "Boundary lengths cannot be negative"
    with pytest.raises(DomainError):
        pants_shear_values(1.0, -1.0, 0.0)

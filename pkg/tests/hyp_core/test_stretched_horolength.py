import math

import pytest

from stretchkit.exceptions import DomainError
from stretchkit.hyp_core import (
    SpiralConfig,
    horolength_derivative,
    spiral_horolength,
    stretched_horolength
)


def test_unstretched():
    "At t = 0 with no offsets both sides contribute a full spiral"
    cfg = SpiralConfig(closed_length=1.0)
    assert stretched_horolength(cfg) == pytest.approx(3.1639534137386530, rel=1e-14)


def test_equal_offsets():
    "Equal offsets factor out"
    cfg = SpiralConfig(closed_length=1.3, offsets=(0.4, 0.4))
    assert stretched_horolength(cfg) == pytest.approx(2 * math.exp(-0.4) * spiral_horolength(1.3), rel=1e-14)


def test_decreases_to_zero():
    "Stretching shrinks the central horocyclic arc monotonically to 0"
    values = [
        stretched_horolength(SpiralConfig(closed_length=1.0, offsets=(0.2, 0.5), time=t))
        for t in [0.0, 0.5, 1.0, 2.0, 3.0, 5.0]
    ]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))
    assert values[-1] < 1e-12


def test_derivative_closed_form():
    "With no offsets the derivative is -2e^{-ℓ}/(1 - e^{-ℓ})² at ℓ = 1"
    cfg = SpiralConfig(closed_length=1.0)
    expected = -2 * math.exp(-1) / (1 - math.exp(-1)) ** 2
    assert horolength_derivative(cfg) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize('offsets, time', [
    ((0.0, 0.0), 0.0),
    ((0.3, 1.1), 0.0),
    ((0.5, 0.5), 0.7),
    ((2.0, 0.1), -0.4),
])
def test_derivative_finite_difference(offsets, time):
    "The derivative agrees with a central finite difference"
    h = 1e-5

    def value(t):
        return stretched_horolength(SpiralConfig(closed_length=0.9, offsets=offsets, time=t))

    cfg = SpiralConfig(closed_length=0.9, offsets=offsets, time=time)
    derivative = horolength_derivative(cfg)
    assert derivative < 0
    assert derivative == pytest.approx((value(time + h) - value(time - h)) / (2 * h), abs=1e-6)


def test_derivative_vanishes_far_out():
    "Large offsets kill every term"
    cfg = SpiralConfig(closed_length=1.0, offsets=(60.0, 60.0))
    assert abs(horolength_derivative(cfg)) < 1e-20


def test_negative_offset():
    "Offsets are distances, so cannot be negative"
    with pytest.raises(DomainError):
        SpiralConfig(closed_length=1.0, offsets=(-0.1, 0.0))


def test_n():
    "The number of spiralling triangles is one more than the interior shears"
    assert SpiralConfig(closed_length=1.0, shears=(0.1, 0.2)).n == 3

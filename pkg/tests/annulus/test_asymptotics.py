import math

import numpy as np
import pytest

from stretchkit.annulus import asymptotic_coeff, stretch_vector_diff


def test_coefficient():
    "The asymptotic coefficient is 4ℓe^{-ℓ}"
    assert asymptotic_coeff(20.0) == pytest.approx(80 * math.exp(-20), rel=1e-15)


def test_ratio_bounds():
    "The relative deviation is 1/ℓ to leading order"
    assert stretch_vector_diff(20.0) / asymptotic_coeff(20.0) - 1 <= 0.06
    assert stretch_vector_diff(100.0) / asymptotic_coeff(100.0) - 1 <= 0.011
    assert stretch_vector_diff(100.0) / asymptotic_coeff(100.0) == pytest.approx(1.01, abs=1e-6)


def test_ratio_monotone():
    "The ratio decreases towards 1"
    ratios = [stretch_vector_diff(length) / asymptotic_coeff(length) for length in np.linspace(5.0, 100.0, 96)]
    assert all(later < earlier for earlier, later in zip(ratios, ratios[1:]))
    assert ratios[-1] > 1

import math

import numpy as np
import pytest

from stretchkit.exceptions import DomainError
from stretchkit.hyp_core import holonomy_trace, holonomy_word, trace_to_length, word_product


def test_no_detours():
    "Without horocyclic detours the curve has length lL + lR"
    trace = holonomy_trace(0.7, 1.2, 0.0, 0.0, 0.0, 0.0)
    assert trace == pytest.approx(2 * math.cosh(0.95), rel=1e-14)
    assert trace_to_length(trace) == pytest.approx(1.9, rel=1e-12)


def test_unit_detours():
    "Unit lengths and detours give 4e + 2 + e^{-1}"
    trace = holonomy_trace(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)
    assert trace == pytest.approx(4 * math.e + 2 + math.exp(-1), rel=1e-14)
    assert trace == pytest.approx(13.2410068, abs=1e-7)
    assert trace_to_length(trace) == pytest.approx(5.1552560, abs=1e-3)


def test_unit_detours_matrix_product():
    "The ten matrix product has the same trace"
    product = word_product(holonomy_word(1.0, 1.0, 1.0, 1.0, 1.0, 1.0))
    assert product.trace == pytest.approx(4 * math.e + 2 + math.exp(-1), rel=1e-12)


def test_random_matrix_oracle():
    "Random inputs agree with the matrix product"
    rng = np.random.default_rng(0)
    for _ in range(1000):
        left, right = rng.uniform(0.05, 4.0, size=2)
        h1, h2, h3, h4 = rng.uniform(0.0, 3.0, size=4)
        expected = word_product(holonomy_word(left, right, h1, h2, h3, h4)).trace
        assert holonomy_trace(left, right, h1, h2, h3, h4) == pytest.approx(expected, rel=1e-9)


def test_domain():
    "Boundary lengths must be positive"
    with pytest.raises(DomainError):
        holonomy_trace(0.0, 1.0, 0.0, 0.0, 0.0, 0.0)

import math

import pytest

from stretchkit.exceptions import DomainError
from stretchkit.surface.metric import covector_sample, covector_table
from stretchkit.surface.torus import ChartPoint, Covector, Slope, TangentVec


def test_chart_slope(markov_point):
    "d log ℓ of the chart curve is (1/ℓ, 0)"
    covector = covector_sample(markov_point, Slope(0, 1))
    assert covector.clength == pytest.approx(1 / markov_point.length, abs=1e-8)
    assert covector.ctwist == pytest.approx(0.0, abs=1e-8)


def test_crossing_slope():
    "The twist derivative of a crossing curve"
    point = ChartPoint(1.0, 0.5)
    covector = covector_sample(point, Slope(1, 0))

    # b is stationary in τ when τ = ℓ/2
    assert covector.ctwist == pytest.approx(0.0, abs=1e-8)

    point = ChartPoint(1.0, 1.5)
    x = (1.5 - 0.5) / 2
    k = 1 / math.tanh(0.5)
    b = 2 * k * math.cosh(x)
    length_b = 2 * math.acosh(b / 2)
    expected = k * math.sinh(x) / (length_b * math.sqrt(b * b / 4 - 1))
    assert covector_sample(point, Slope(1, 0)).ctwist == pytest.approx(expected, rel=1e-7)


def test_table_agrees_with_samples():
    "The table computes the same covectors as one slope at a time"
    point = ChartPoint(0.8, -0.4)
    table = covector_table(point, depth=3)
    for slope in (Slope(1, 0), Slope(1, 2), Slope(-3, 2)):
        sample = covector_sample(point, slope)
        assert table[slope].clength == pytest.approx(sample.clength, abs=1e-6)
        assert table[slope].ctwist == pytest.approx(sample.ctwist, abs=1e-6)


@pytest.mark.parametrize('fd_step', [0.0, 1e-9, 0.1])
def test_fd_step_range(markov_point, fd_step):
    "Finite difference steps must be sensible"
    with pytest.raises(DomainError):
        covector_sample(markov_point, Slope(0, 1), fd_step=fd_step)


def test_covector_pairing():
    "Covectors pair linearly with tangent vectors"
    covector = Covector(2.0, -1.0)
    assert covector(TangentVec(1.0, 3.0)) == -1.0
    assert covector(2 * TangentVec(1.0, 3.0)) == -2.0

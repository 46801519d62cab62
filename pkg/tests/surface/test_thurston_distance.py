import math

import pytest

from stretchkit.annulus import SpiralPattern
from stretchkit.exceptions import DomainError
from stretchkit.surface.metric import stretch_flow, thurston_distance
from stretchkit.surface.torus import MARKOV333, ChartPoint, Slope, fn_to_fricke


def test_zero_distance():
    "A structure is at distance 0 from itself"
    assert thurston_distance(MARKOV333, MARKOV333, depth=7).value == 0.0


@pytest.mark.parametrize('t', [0.1, 0.3, 1.0])
@pytest.mark.parametrize('pattern', list(SpiralPattern))
def test_stretch_lines_are_geodesics(markov_point, pattern, t):
    "Flowing for time t moves a distance t, stretching the spiralled curve most"
    end = stretch_flow(markov_point, pattern, t).triple
    report = thurston_distance(MARKOV333, end, depth=7)
    assert report.value == pytest.approx(t, abs=5e-3)
    assert report.argmax == Slope(0, 1)


def test_asymmetric():
    "The distance is not symmetric"
    x = fn_to_fricke(ChartPoint(1.0, 0.0))
    y = fn_to_fricke(ChartPoint(3.0, 0.0))
    forward = thurston_distance(x, y).value
    backward = thurston_distance(y, x).value
    assert forward > 0
    assert backward > 0
    assert not math.isclose(forward, backward, rel_tol=1e-3)


def test_depth():
    "The supremum needs at least depth 2 for its stabilization report"
    with pytest.raises(DomainError):
        thurston_distance(MARKOV333, MARKOV333, depth=1)

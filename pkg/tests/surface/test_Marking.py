import pytest

from stretchkit.exceptions import DomainError
from stretchkit.surface.torus import (
    MARKOV333,
    ChartPoint,
    Marking,
    Slope,
    enumerate_slopes,
    fn_to_fricke,
    intersection_number,
    slope_length
)


def test_standard():
    "The standard marking measures 0/1 twisting against 1/0"
    marking = Marking.standard()
    assert marking.is_standard
    assert Marking.for_slope(Slope(0, 1)) == marking
    assert marking.to_local(Slope(2, 3)) == Slope(2, 3)


def test_orientation():
    "Markings must be positively oriented bases"
    with pytest.raises(DomainError):
        Marking((1, 0), (0, 1))
    with pytest.raises(DomainError):
        Marking((2, 0), (0, 1))


@pytest.mark.parametrize('slope', [Slope(1, 0), Slope(1, 1), Slope(2, 5), Slope(-3, 7)])
def test_distinguished_curve(slope):
    "The distinguished curve is local 0/1"
    marking = Marking.for_slope(slope)
    assert marking.to_local(slope) == Slope(0, 1)
    assert intersection_number(Slope.from_vector(marking.beta), slope) == 1


def test_partner():
    "A partner crossing once becomes local 1/0"
    marking = Marking.for_slope(Slope(1, 5), partner=Slope(0, 1))
    assert marking.to_local(Slope(0, 1)) == Slope(1, 0)


def test_local_round_trip():
    "from_local inverts to_local"
    marking = Marking.for_slope(Slope(2, 5))
    for slope in enumerate_slopes(4):
        assert marking.from_local(marking.to_local(slope)) == slope


def test_local_lengths():
    "Lengths do not depend on the marking they are computed in"
    x = fn_to_fricke(ChartPoint(1.2, 0.3))
    marking = Marking.for_slope(Slope(1, 2))
    local = marking.local_triple(x)
    for slope in enumerate_slopes(3):
        assert slope_length(local, marking.to_local(slope)) == pytest.approx(slope_length(x, slope), rel=1e-10)


def test_standard_triple_round_trip():
    "standard_triple inverts local_triple"
    marking = Marking.for_slope(Slope(-1, 3))
    back = marking.standard_triple(marking.local_triple(MARKOV333))
    assert back.traces == pytest.approx(MARKOV333.traces, rel=1e-10)


def test_chart_point():
    "The chart of a slope measures that slope's length"
    marking = Marking.for_slope(Slope(1, 2))
    point = marking.chart_point(MARKOV333)
    assert point.length == pytest.approx(slope_length(MARKOV333, Slope(1, 2)), rel=1e-12)

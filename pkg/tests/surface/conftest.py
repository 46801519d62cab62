import pytest

from stretchkit.surface.torus import MARKOV333, Marking


@pytest.fixture
def markov_point():
    "The (3,3,3) structure in the chart of 0/1"
    return Marking.standard().chart_point(MARKOV333)

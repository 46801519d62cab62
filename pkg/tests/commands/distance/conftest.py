import pytest

from stretchkit.commands import DistanceCommand


@pytest.fixture
def distance_command(tmp_path):
    return DistanceCommand(base_path=tmp_path)

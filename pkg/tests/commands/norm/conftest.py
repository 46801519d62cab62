import pytest

from stretchkit.commands import NormCommand


@pytest.fixture
def norm_command(tmp_path):
    return NormCommand(base_path=tmp_path)

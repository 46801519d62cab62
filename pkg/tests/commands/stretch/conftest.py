import pytest

from stretchkit.commands import StretchCommand


@pytest.fixture
def stretch_command(tmp_path):
    return StretchCommand(base_path=tmp_path)

import pytest

from stretchkit.commands import TwistWidthCommand


@pytest.fixture
def twist_width_command(tmp_path):
    return TwistWidthCommand(base_path=tmp_path)

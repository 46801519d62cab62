import pytest

from stretchkit.commands import BacktimeCommand


@pytest.fixture
def backtime_command(tmp_path):
    return BacktimeCommand(base_path=tmp_path)

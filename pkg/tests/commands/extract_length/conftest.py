import pytest

from stretchkit.commands import ExtractLengthCommand


@pytest.fixture
def extract_command(tmp_path):
    return ExtractLengthCommand(base_path=tmp_path)

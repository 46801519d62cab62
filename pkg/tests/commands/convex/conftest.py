import pytest

from stretchkit.commands import ConvexCommand


@pytest.fixture
def convex_command(tmp_path):
    return ConvexCommand(base_path=tmp_path)

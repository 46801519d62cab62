import pytest

from stretchkit.commands import DualSphereCommand, PrimalSphereCommand


@pytest.fixture
def dual_sphere_command(tmp_path):
    return DualSphereCommand(base_path=tmp_path)


@pytest.fixture
def primal_sphere_command(tmp_path):
    return PrimalSphereCommand(base_path=tmp_path)

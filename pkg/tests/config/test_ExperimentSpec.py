import pytest

from stretchkit.config import ExperimentSpec
from stretchkit.exceptions import ConfigError


def test_defaults():
    "A spec can be built from the command name alone"
    spec = ExperimentSpec(command='norm')

    assert spec.seed == 0
    assert spec.depth == 7
    assert spec.fd_step == 1e-4
    assert spec.s_max == 25.0
    assert spec.m_max == 25
    assert spec.output is None
    assert repr(spec) == '<norm ExperimentSpec seed=0>'


def test_extra_values():
    "Unknown configuration values are kept as attributes"
    spec = ExperimentSpec(command='norm', flavor='vanilla')

    assert spec.flavor == 'vanilla'


def test_parameters():
    "Parameters skip the command name and unset values"
    spec = ExperimentSpec(command='stretch', seed=3, t=0.5)

    parameters = spec.parameters()
    assert 'command' not in parameters
    assert 'output' not in parameters
    assert parameters['seed'] == 3
    assert parameters['t'] == 0.5
    assert list(parameters) == sorted(parameters)


@pytest.mark.parametrize('values, name', [
    ({'depth': -1}, 'depth'),
    ({'depth': 2.5}, 'depth'),
    ({'fd_step': 1.0}, 'fd_step'),
    ({'fd_step': 1e-9}, 'fd_step'),
    ({'s_max': 0.0}, 's_max'),
    ({'m_max': 0}, 'm_max'),
    ({'tolerance': -1e-3}, 'tolerance'),
    ({'precision': 0.1}, 'precision'),
    ({'seed': 'abc'}, 'seed'),
])
def test_invalid(values, name):
    "Out of range values are configuration errors"
    with pytest.raises(ConfigError, match="{name} = .* is invalid".format(name=name)):
        ExperimentSpec(command='norm', **values)


def test_distance_depth():
    "Distances need two levels of slopes to report increments"
    ExperimentSpec(command='norm', depth=1)
    with pytest.raises(ConfigError, match="depth = 1 is invalid"):
        ExperimentSpec(command='distance', depth=1)

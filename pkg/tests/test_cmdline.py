import pytest

from stretchkit import __version__
from stretchkit.cmdline import parse_cmdline
from stretchkit.commands import COMMANDS, DistanceCommand, StretchCommand
from stretchkit.exceptions import InvalidArgumentsError, NoCommandError
from stretchkit.surface.torus import MARKOV333


def test_empty():
    "``stretchkit`` returns basic usage"
    with pytest.raises(NoCommandError) as excinfo:
        parse_cmdline(''.split())

    assert excinfo.value.msg.startswith(
        'usage: stretchkit [-h] <command> ...\n'
        '\n'
        "Experiments with Thurston's asymmetric metric and stretch maps.\n"
    )
    assert excinfo.value.error_code == 0


def test_help_only():
    "``stretchkit -h`` returns basic usage"
    with pytest.raises(NoCommandError) as excinfo:
        parse_cmdline('-h'.split())

    assert excinfo.value.msg.startswith('usage: stretchkit [-h] <command> ...\n')


def test_version_only(capsys):
    "``stretchkit -V`` returns current version"
    with pytest.raises(SystemExit) as excinfo:
        parse_cmdline('-V'.split())

    # Normal exit due to displaying the version
    assert excinfo.value.code == 0
    output = capsys.readouterr().out
    assert output == '{__version__}\n'.format(__version__=__version__)


def test_unknown_command():
    "``stretchkit foobar`` fails as an invalid command"
    with pytest.raises(InvalidArgumentsError, match="invalid choice: 'foobar'") as excinfo:
        parse_cmdline('foobar'.split())

    assert excinfo.value.error_code == 3


def test_all_commands():
    "Every command is available by name"
    assert sorted(COMMANDS) == [
        'backtime', 'convex', 'distance', 'dual-sphere', 'extract-length',
        'norm', 'primal-sphere', 'stretch', 'twist-width',
    ]


def test_distance_command():
    "``stretchkit distance --y markov333`` returns the distance command"
    cmd, options = parse_cmdline('distance --y markov333'.split())

    assert isinstance(cmd, DistanceCommand)
    assert options == {
        'verbosity': 1,
        'output': None,
        'seed': None,
        'x': MARKOV333,
        'y': MARKOV333,
        'depth': None,
    }


def test_negative_ln_time():
    "Negative ln times pass through to the command"
    cmd, options = parse_cmdline(['stretch', '--annulus', 'l=1', '--t=-ln2'])

    assert isinstance(cmd, StretchCommand)
    assert options['t'] == pytest.approx(-0.6931471805599453)


def test_command_help(capsys):
    "``stretchkit norm -h`` returns the norm command help"
    with pytest.raises(SystemExit) as excinfo:
        parse_cmdline('norm -h'.split())

    # Normal exit due to displaying help
    assert excinfo.value.code == 0
    output = capsys.readouterr().out
    assert output.startswith('usage: stretchkit norm [-h]')
    assert 'Approximate the Thurston (Finsler) norm of a tangent vector.' in output


def test_command_version(capsys):
    "``stretchkit convex -V`` returns the version"
    with pytest.raises(SystemExit) as excinfo:
        parse_cmdline('convex -V'.split())

    assert excinfo.value.code == 0
    output = capsys.readouterr().out
    assert output == '{__version__}\n'.format(__version__=__version__)


def test_command_bad_option():
    "Unknown command options are input errors"
    with pytest.raises(InvalidArgumentsError, match='stretchkit twist-width: unrecognized arguments: --beta 2'):
        parse_cmdline('twist-width --beta 2'.split())

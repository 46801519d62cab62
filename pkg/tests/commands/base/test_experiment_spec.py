def test_defaults(base_command):
    "Without options or configuration, built-in defaults are used"
    options = {'extra': 'wibble', 'depth': None, 'seed': None, 'output': None}

    spec = base_command.experiment_spec(options)

    assert spec.command == 'dummy'
    assert spec.depth == 7
    assert spec.seed == 0
    # Experiment options are consumed; the rest are left for the command.
    assert options == {'extra': 'wibble'}


def test_configured(base_command):
    "Configured values override defaults"
    base_command.config = {'depth': 5, 'seed': 3}

    spec = base_command.experiment_spec({'depth': None, 'seed': None})

    assert spec.depth == 5
    assert spec.seed == 3


def test_command_line_wins(base_command):
    "Explicit command line values override configured values"
    base_command.config = {'depth': 5, 'seed': 3}

    spec = base_command.experiment_spec({'depth': 9, 'seed': None})

    assert spec.depth == 9
    assert spec.seed == 3


def test_call(base_command):
    "Calling a command builds the ExperimentSpec and runs it with the remaining options"
    base_command(verbosity=2, depth=4, seed=None, output=None, extra='wibble', mystery=None, required='yes')

    assert base_command.verbosity == 2
    assert base_command.artefact_on_stdout
    (spec, options), = base_command.runs
    assert spec.depth == 4
    assert options == {'extra': 'wibble', 'mystery': None, 'required': 'yes'}


def test_call_with_output(base_command):
    "Artefacts written to a file leave standard output for logging"
    base_command(output='result.csv', required='yes')

    assert not base_command.artefact_on_stdout

import toml

from .exceptions import ConfigError

FD_STEP_RANGE = (1e-7, 1e-2)


class BaseConfig:
    def __init__(self, **kwargs):
        for attr, value in kwargs.items():
            setattr(self, attr, value)


class ExperimentSpec(BaseConfig):
    def __init__(
        self,
        command,
        seed=0,
        depth=7,
        fd_step=1e-4,
        t=None,
        s_max=25.0,
        m_max=25,
        tolerance=5e-3,
        output=None,
        precision=1e-9,
        **kwargs
    ):
        super().__init__(**kwargs)
        self.command = command
        self.seed = seed
        self.depth = depth
        self.fd_step = fd_step
        self.t = t
        self.s_max = s_max
        self.m_max = m_max
        self.tolerance = tolerance
        self.output = output
        self.precision = precision

        minimum_depth = 2 if command == 'distance' else 0
        self._require(
            isinstance(depth, int) and depth >= minimum_depth,
            'depth', depth, 'an integer >= {m}'.format(m=minimum_depth)
        )
        low, high = FD_STEP_RANGE
        self._require(low <= fd_step <= high, 'fd_step', fd_step, 'in [{low}, {high}]'.format(low=low, high=high))
        self._require(s_max > 0, 's_max', s_max, '> 0')
        self._require(isinstance(m_max, int) and m_max >= 1, 'm_max', m_max, 'an integer >= 1')
        self._require(tolerance > 0, 'tolerance', tolerance, '> 0')
        self._require(0 < precision <= 1e-3, 'precision', precision, 'in (0, 1e-3]')
        self._require(isinstance(seed, int), 'seed', seed, 'an integer')

    @staticmethod
    def _require(condition, name, value, requirement):
        if not condition:
            raise ConfigError(
                "{name} = {value!r} is invalid (must be {requirement})".format(
                    name=name,
                    value=value,
                    requirement=requirement,
                )
            )

    def __repr__(self):
        return "<{self.command} ExperimentSpec seed={self.seed}>".format(self=self)

    def parameters(self):
        "Every non-None setting except the command name, for provenance headers."
        return {
            key: value
            for key, value in sorted(vars(self).items())
            if key != 'command' and value is not None
        }


def merge_config(config, data):
    """
    Merge a new set of configuration values into a base configuration.

    :param config: the base configuration to update. This configuration
        is modified in-situ.
    :param data: The new configuration data to merge into the configuration.
        Nested tables are ignored; they belong to other commands.
    """
    config.update({
        key: value
        for key, value in data.items()
        if not isinstance(value, dict)
    })


def parse_config(config_file, command):
    """
    Parse the stretchkit section of a pyproject.toml configuration file.

    Reads:

      * ``[tool.stretchkit]`` - defaults for every command
      * ``[tool.stretchkit.<command>]`` - defaults for one command

    Command level values take precedence over global values.

    :param config_file: A file-like object containing TOML to be parsed.
    :param command: The name of the command being run.
    :returns: A flat dictionary of configuration values.
    """
    try:
        pyproject = toml.load(config_file)

        global_config = pyproject['tool']['stretchkit']
    except toml.TomlDecodeError as e:
        raise ConfigError('Invalid configuration file: {e}'.format(e=e))
    except KeyError:
        raise ConfigError('No tool.stretchkit section in configuration file')

    config = {}
    merge_config(config, global_config)
    command_config = global_config.get(command)
    if isinstance(command_config, dict):
        merge_config(config, command_config)
    return config

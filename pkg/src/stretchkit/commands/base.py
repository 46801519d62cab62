import argparse
import csv
import inspect
import json
import sys
from abc import ABC, abstractmethod
from fractions import Fraction

from stretchkit import __version__
from stretchkit.config import ExperimentSpec, parse_config
from stretchkit.exceptions import ConfigError, InvalidArgumentsError

SCHEMA_VERSION = 1


def create_config(klass, config, msg):
    try:
        return klass(**config)
    except TypeError:
        # Inspect the constructor to find which parameters are required and
        # don't have a default value.
        required_args = {
            name
            for name, param in inspect.signature(klass.__init__).parameters.items()
            if param.default == inspect._empty
            and name not in {'self', 'kwargs'}
        }
        missing_args = required_args - config.keys()
        missing = ', '.join(
            "'{arg}'".format(arg=arg)
            for arg in sorted(missing_args)
        )
        raise ConfigError(
            "{msg} is incomplete (missing {missing})".format(
                msg=msg,
                missing=missing
            )
        )


def full_kwargs(overrides, defaults):
    """
    Layer explicit settings over configured defaults.

    :param overrides: Settings given explicitly for this run, or ``None``.
    :param defaults: Configured defaults; never modified.
    :returns: A new dictionary with every key of both, ``overrides`` winning.
    """
    merged = dict(defaults)
    if overrides:
        merged.update(overrides)
    return merged


class ArgumentParser(argparse.ArgumentParser):
    "An argument parser that reports errors as exceptions rather than exiting."
    def error(self, message):
        raise InvalidArgumentsError(self.prog, message)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    return value


class BaseCommand(ABC):
    cmd_line = "stretchkit {command}"
    SPEC_CLASS = ExperimentSpec

    # Options that are parameters of the experiment, rather than of
    # the invocation; these can also be set in pyproject.toml.
    SPEC_OPTIONS = ('seed', 'depth', 'fd_step', 't', 's_max', 'm_max', 'tolerance', 'output', 'precision')

    def __init__(self, base_path, config=None):
        self.base_path = base_path
        self.config = {} if config is None else config
        self.verbosity = 1
        self.artefact_on_stdout = False

        # Where artefacts go without --output; None means the current sys.stdout.
        self.stdout = None

    @property
    @abstractmethod
    def command(self):
        ...

    @property
    @abstractmethod
    def description(self):
        ...

    def parse_options(self, extra):
        parser = ArgumentParser(
            prog=self.cmd_line.format(command=self.command),
            description=self.description,
        )

        self.add_default_options(parser)
        self.add_options(parser)

        # Parse the full set of command line options from the content
        # remaining after the command has been extracted.
        return vars(parser.parse_args(extra))

    def add_default_options(self, parser):
        """
        Add the default options that exist on *all* commands

        :param parser: a stub argparse parser for the command.
        """
        parser.add_argument(
            '-v', '--verbosity',
            action='count',
            default=1,
            help="set the verbosity of output"
        )
        parser.add_argument(
            '-V', '--version',
            action='version',
            version=__version__
        )
        parser.add_argument(
            '-o', '--output',
            help="write the result to this file (default: standard output)"
        )
        parser.add_argument(
            '--seed',
            type=int,
            help="seed for randomized inputs"
        )

    def add_options(self, parser):
        """
        Add any options that this command needs to parse from the command line.

        :param parser: a stub argparse parser for the command.
        """
        pass

    def parse_config(self, filename):
        "Load defaults from a pyproject.toml file; a missing file means built-in defaults."
        try:
            with open(filename) as config_file:
                self.config = parse_config(config_file, command=self.command)
        except FileNotFoundError:
            self.config = {}

    def experiment_spec(self, options):
        """
        Build the ExperimentSpec for a run: explicit command line options
        override configured values, which override built-in defaults.
        """
        given = {
            key: options.pop(key)
            for key in self.SPEC_OPTIONS
            if key in options and options[key] is not None
        }
        for key in self.SPEC_OPTIONS:
            options.pop(key, None)
        return create_config(
            klass=self.SPEC_CLASS,
            config=full_kwargs(dict(given, command=self.command), self.config),
            msg="Configuration for '{command}'".format(command=self.command),
        )

    def __call__(self, verbosity=1, **options):
        self.verbosity = verbosity
        spec = self.experiment_spec(options)
        self.artefact_on_stdout = spec.output is None
        return self.run(spec, **options)

    @abstractmethod
    def run(self, spec, **options):
        ...

    def log(self, message, level=1):
        if self.verbosity >= level:
            # Keep standard output clean when the artefact is written there.
            print(
                '[{command}] {message}'.format(command=self.command, message=message),
                file=sys.stderr if self.artefact_on_stdout else sys.stdout,
            )

    def provenance(self, spec, **parameters):
        values = dict(spec.parameters(), **parameters)
        return '# stretchkit {version} {command} {params}'.format(
            version=__version__,
            command=self.command,
            params=' '.join(
                '{key}={value}'.format(key=key, value=value)
                for key, value in sorted(values.items())
            ),
        )

    def _stdout(self):
        return self.stdout if self.stdout is not None else sys.stdout

    def _open_output(self, spec):
        if spec.output is None:
            return None
        return open(self.base_path / spec.output, 'w', encoding='utf-8', newline='')

    def write_csv(self, spec, header, rows, **parameters):
        "Write a CSV artefact, preceded by a provenance comment line."
        stream = self._open_output(spec)
        try:
            target = stream if stream is not None else self._stdout()
            target.write(self.provenance(spec, **parameters) + '\n')
            writer = csv.writer(target, lineterminator='\n')
            writer.writerow(header)
            for row in rows:
                writer.writerow([_format_cell(cell) for cell in row])
        finally:
            if stream is not None:
                stream.close()
                self.log("wrote {output}".format(output=spec.output))

    def write_json(self, spec, result, **parameters):
        "Write a JSON artefact with schema version and parameters."
        document = {
            'schema_version': SCHEMA_VERSION,
            'command': self.command,
            'version': __version__,
            'parameters': _jsonable(dict(spec.parameters(), **parameters)),
            'result': _jsonable(result),
        }
        stream = self._open_output(spec)
        try:
            target = stream if stream is not None else self._stdout()
            json.dump(document, target, sort_keys=True, indent=2)
            target.write('\n')
        finally:
            if stream is not None:
                stream.close()
                self.log("wrote {output}".format(output=spec.output))


def _format_cell(cell):
    if isinstance(cell, float):
        return repr(cell)
    if cell is None:
        return ''
    return str(cell)

from pathlib import Path

from stretchkit import __version__
from stretchkit.commands import COMMANDS
from stretchkit.commands.base import ArgumentParser

from .exceptions import NoCommandError


def parse_cmdline(args):
    parser = ArgumentParser(
        prog="stretchkit",
        description="Experiments with Thurston's asymmetric metric and stretch maps.",
        usage="stretchkit [-h] <command> ...",
        epilog="Each command has additional options. "
               "Use the -h option on a specific command for more details.",
        add_help=False
    )
    parser.add_argument(
        '-V', '--version',
        action='version',
        version=__version__
    )

    # Optional so that `stretchkit` alone prints the command list.
    parser.add_argument(
        'command',
        choices=list(COMMANDS),
        metavar='command',
        nargs='?',
        help='the command to execute (one of: %(choices)s)',
    )

    # The remaining arguments belong to the command.
    options, extra = parser.parse_known_args(args)

    if options.command is None:
        raise NoCommandError(parser.format_help())

    command = COMMANDS[options.command](base_path=Path.cwd())
    options = command.parse_options(extra=extra)
    return command, options

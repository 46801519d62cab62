import sys

from .cmdline import parse_cmdline
from .exceptions import StretchkitError


def main():
    try:
        command, options = parse_cmdline(sys.argv[1:])
        command.parse_config('pyproject.toml')
        command(**options)
        result = 0
    except StretchkitError as e:
        if e.error_code == 0:
            print(e, file=sys.stdout)
        else:
            print(e.to_json(), file=sys.stderr)
        result = e.error_code

    sys.exit(result)


if __name__ == '__main__':
    main()

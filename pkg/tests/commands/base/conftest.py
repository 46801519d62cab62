import pytest

from stretchkit.commands.base import BaseCommand


class DummyCommand(BaseCommand):
    """
    A dummy command to test the BaseCommand interface.
    """
    command = 'dummy'
    description = 'Dummy base command'

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.runs = []

    def add_options(self, parser):
        # Provide some extra arguments:
        # * some optional arguments
        parser.add_argument('-x', '--extra')
        parser.add_argument('-m', '--mystery')
        parser.add_argument('--depth', type=int)
        # * a required argument
        parser.add_argument('-r', '--required', required=True)

    def run(self, spec, **options):
        self.runs.append((spec, options))
        return spec


class OtherDummyCommand(BaseCommand):
    command = 'other'
    description = 'Another dummy command'

    def run(self, spec, **options):
        return spec


@pytest.fixture
def base_command(tmp_path):
    return DummyCommand(base_path=tmp_path)


@pytest.fixture
def other_command(tmp_path):
    return OtherDummyCommand(base_path=tmp_path)

import json
from fractions import Fraction

from stretchkit import __version__
from stretchkit.config import ExperimentSpec


def test_document(base_command, capsys):
    "JSON artefacts carry the schema version, command and parameters"
    spec = ExperimentSpec(command='dummy', depth=5)

    base_command.write_json(spec, {'value': 1.25}, slope='0/1')

    document = json.loads(capsys.readouterr().out)
    assert document['schema_version'] == 1
    assert document['command'] == 'dummy'
    assert document['version'] == __version__
    assert document['parameters']['depth'] == 5
    assert document['parameters']['slope'] == '0/1'
    assert document['result'] == {'value': 1.25}


def test_exact_values(base_command, capsys):
    "Fractions are written as strings, and sets as sorted lists"
    spec = ExperimentSpec(command='dummy')

    base_command.write_json(spec, {'point': (Fraction(1, 2), 3), 'ids': {'b', 'a'}, 1: None})

    assert json.loads(capsys.readouterr().out)['result'] == {
        'point': ['1/2', 3],
        'ids': ['a', 'b'],
        '1': None,
    }


def test_output_file(base_command, tmp_path):
    "With an output file, the document goes there"
    spec = ExperimentSpec(command='dummy', output='result.json')

    base_command.write_json(spec, {'value': 2})

    document = json.loads((tmp_path / 'result.json').read_text(encoding='utf-8'))
    assert document['result'] == {'value': 2}
    assert document['parameters']['output'] == 'result.json'

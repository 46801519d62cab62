import csv
import json

import pytest

from stretchkit.annulus import TwistWidthInput, twist_width
from stretchkit.commands.twist_width import decay_table, parse_alphas, parse_cases
from stretchkit.exceptions import ConfigError, DomainError


def test_parse_cases():
    assert parse_cases('I, III') == ['I', 'III']
    assert parse_cases('all') == ['I', 'II', 'III', 'IV']


def test_parse_alphas():
    assert parse_alphas('1,2.5,ln2') == pytest.approx([1.0, 2.5, 0.6931471805599453])


def test_decay_table():
    "One row per case and length"
    rows = decay_table(['I', 'II'], [5.0, 10.0])
    assert [row[:2] for row in rows] == [['I', 5.0], ['I', 10.0], ['II', 5.0], ['II', 10.0]]
    assert rows[1][5] < rows[0][5]


def test_unknown_case():
    with pytest.raises(DomainError, match='one of I, II, III, IV'):
        decay_table(['V'], [1.0])


def test_single(twist_width_command, capsys):
    "A single width is written as JSON"
    options = twist_width_command.parse_options(extra=['--alpha', '2', '--left', '1,1.5'])
    width = twist_width_command(**options)

    document = json.loads(capsys.readouterr().out)
    assert document['parameters']['left'] == [1.0, 1.5]
    assert document['result']['twist_width'] == width
    assert width == twist_width(TwistWidthInput(alpha=2.0, left=(1.0, 1.5), right=(1.0, 1.0)))
    assert len(document['result']['regimes']) == 2


def test_decay(twist_width_command, capsys):
    "Decay tables are written as CSV"
    options = twist_width_command.parse_options(extra=['--decay', 'I', '--alphas', '5,10,20'])
    twist_width_command(**options)

    lines = capsys.readouterr().out.splitlines()
    rows = list(csv.reader(lines[1:]))
    assert rows[0] == ['case', 'alpha', 'beta', 'gamma', 'regime', 'twist_width', 'core_term']
    widths = [float(row[5]) for row in rows[1:]]
    assert len(widths) == 3
    assert widths[0] > widths[1] > widths[2]


def test_alpha_required(twist_width_command):
    options = twist_width_command.parse_options(extra=[])
    with pytest.raises(ConfigError, match='needs --alpha'):
        twist_width_command(**options)

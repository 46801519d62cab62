import json

import pytest

from stretchkit.exceptions import InvalidArgumentsError


def run(command, capsys, *extra):
    options = command.parse_options(extra=list(extra))
    command(**options)
    return json.loads(capsys.readouterr().out)['result']


def test_analyze_poset(convex_command, capsys):
    "Abstract posets get an adherence report"
    result = run(convex_command, capsys, 'analyze', '--poset', 'stadium')

    assert result['faces']['x']['closure'] == 'e'
    assert result['intersection_failures'] == []
    assert result['lattice']['name'] == 'stadium'


def test_analyze_polytope(convex_command, capsys):
    "Polytopes get face data, including codimensions"
    result = run(convex_command, capsys, 'analyze', '--polytope', 'cube:3')

    assert result['dimension'] == 3
    assert len(result['facets']) == 6
    assert len(result['faces']) == 26
    assert result['origin_interior']
    assert result['dim_plus_codim'] == [2]
    assert all(entry['exposed'] for entry in result['faces'].values())
    assert result['vertices'][0] == ['-1', '-1', '-1']


def test_analyze_off_centre(convex_command, capsys):
    "Without an interior origin there are no codimensions"
    result = run(convex_command, capsys, 'analyze', '--polytope', 'square:2')

    assert not result['origin_interior']
    assert result['dim_plus_codim'] == []
    assert all('codim' not in entry for entry in result['faces'].values())


def test_dual(convex_command, capsys):
    "The dual of the cube is the cross polytope, and face data is invariant"
    result = run(convex_command, capsys, 'dual', '--polytope', 'cube:3', '--maps', '3')

    assert sorted(result['vertices']) == sorted([
        ['-1', '0', '0'], ['0', '-1', '0'], ['0', '0', '-1'],
        ['0', '0', '1'], ['0', '1', '0'], ['1', '0', '0'],
    ])
    assert result['double_dual_is_primal']
    assert result['maps'] == 3
    assert all(result['linear_invariance'].values())


def test_dual_poset(convex_command):
    "Duals need an exact polytope"
    options = convex_command.parse_options(extra=['dual', '--poset', 'square'])
    with pytest.raises(InvalidArgumentsError, match='dual requires --polytope'):
        convex_command(**options)


def test_source_required(convex_command):
    with pytest.raises(InvalidArgumentsError, match='one of the arguments --poset --polytope is required'):
        convex_command.parse_options(extra=['analyze'])


def test_dual_vertices(convex_command, capsys, tmp_path):
    "The dual's vertices can be saved and read back as a polytope"
    path = tmp_path / 'dual.csv'
    run(convex_command, capsys, 'dual', '--polytope', 'cube:3', '--vertices', str(path))

    lines = path.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'x0,x1,x2'
    assert len(lines) == 7

    result = run(convex_command, capsys, 'analyze', '--polytope', str(path))
    assert len(result['vertices']) == 6
    assert len(result['facets']) == 8


def test_analyze_vertices(convex_command, capsys, tmp_path):
    "Analyzing a random polytope can save its hull"
    path = tmp_path / 'hull.csv'
    result = run(convex_command, capsys, 'analyze', '--polytope', 'random:3', '--vertices', str(path))

    lines = path.read_text(encoding='utf-8').splitlines()
    assert len(lines) == len(result['vertices']) + 1

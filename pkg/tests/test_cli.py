import json

import pytest

import superbialgebra.cli as CLI


def run_json(capsys, *argv):
    code = CLI.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_check_algebra(capsys):
    code, obj = run_json(capsys, 'check-algebra', '--name', 'gl11')
    assert code == 0
    assert obj['passed'] is True
    assert obj['command'].startswith('check-algebra ')
    assert obj['summary']['evidence'] == 1


def test_check_algebra_from_file(capsys, tmpdir, gl11):
    path = tmpdir.join('gl11.json')
    path.write(json.dumps(gl11.to_json()))
    code, obj = run_json(capsys, 'check-algebra', '--file', str(path))
    assert code == 0


def test_failing_structure_exits_one(capsys, tmpdir):
    path = tmpdir.join('bad.json')
    path.write(json.dumps({
        'name': 'bad',
        'basis': [{'label': 'X1', 'parity': 0}, {'label': 'X2', 'parity': 0},
                  {'label': 'X3', 'parity': 1}, {'label': 'X4', 'parity': 1}],
        'brackets': [{'i': 3, 'j': 3, 'k': 1, 're': '1', 'im': '0'},
                     {'i': 1, 'j': 3, 'k': 3, 're': '1', 'im': '0'}],
    }))
    code, obj = run_json(capsys, 'check-algebra', '--file', str(path))
    assert code == 1
    assert obj['passed'] is False


@pytest.mark.parametrize('argv', [
    ['check-algebra', '--name', 'nope'],
    ['check-algebra'],
    ['check-algebra', '--name', 'D5', '--param', 'p'],
    ['find-r', '--dual', 'C2_p.i'],
    ['find-r', '--dual', 'C2_p.i', '--param', 'p=1'],
    ['quantize', '--prop', 'P6'],
    ['quantize', '--prop', 'P6', '--lambda', '0.5'],
    ['osp-invariants', '--kmax', '0'],
    [],
    ['no-such-command'],
])
def test_usage_errors(capsys, argv):
    assert CLI.main(argv) == 2
    assert capsys.readouterr().out == ''


def test_csv_format(capsys):
    code = CLI.main(['check-algebra', '--name', 'gl11', '--format', 'csv'])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0] == 'name,status,expected,computed,provenance,detail'


def test_find_r(capsys):
    code, obj = run_json(capsys, 'find-r', '--dual', 'C2_-1.ii')
    assert code == 0
    assert obj['items'][0]['status'] == 'pass'


def test_schouten_of_json_r(capsys):
    r = json.dumps([{'i': 3, 'j': 4, 're': '1', 'im': '0'},
                    {'i': 4, 'j': 3, 're': '1', 'im': '0'}])
    code, obj = run_json(capsys, 'schouten', '--r', r)
    assert code == 0
    items = dict((item['name'], item) for item in obj['items'])
    assert items['[[r, r]]']['computed'] == '-1'
    assert items['type']['computed'] == 'quasi-triangular'


def test_poisson_pairs(capsys):
    code, obj = run_json(capsys, 'poisson-gl11', '--r', 'C2_-1.ii',
                         '--pairs', 'y,psi;y,chi')
    assert code == 0
    assert [item['computed'] for item in obj['items']] == \
        ['(1)*psi', '(-1)*chi']
    assert CLI.main(['poisson-gl11', '--r', 'C2_-1.ii',
                     '--pairs', 'y,q']) == 2


def test_quantum_r(capsys):
    code, obj = run_json(capsys, 'quantum-r')
    assert code == 0
    assert obj['summary'] == {'pass': 3, 'fail': 0, 'evidence': 0}


def test_quantum_r_reports_failing_intertwiner(capsys):
    code, obj = run_json(capsys, 'quantum-r', '--prop', 'P3')
    assert code == 1
    assert obj['items'][-1]['status'] == 'fail'


def test_table_format(capsys):
    code = CLI.main(['check-algebra', '--name', 'gl11', '--format',
                     'table'])
    out = capsys.readouterr().out
    assert code == 0
    assert ': 4 pass, 0 fail, 1 evidence' in out


def test_parser_lists_every_command():
    parser = CLI.build_parser()
    text = parser.format_help()
    for name, _, _ in CLI.COMMANDS:
        assert name in text


def test_verify_appendix_a_checks_the_pairing(capsys):
    code, obj = run_json(capsys, 'verify-appendix-a', '--count', '1')
    assert code == 0
    pairing = [item for item in obj['items']
               if item['name'].endswith(': pairing')]
    assert pairing
    assert all(item['status'] == 'pass' for item in pairing)
    assert obj['summary']['fail'] == 0

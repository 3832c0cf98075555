"""Command-line subcommands and exit codes."""

import json

import pytest

from pp8.cli.commands import main, output_path


def test_is_pp(capsys):
    assert main(['is-pp', '--r', '4', '--coeffs', '0,1,e,0,e^3,e^5,e']) == 0
    assert capsys.readouterr().out.strip() == 'PP'
    assert main(['is-pp', '--r', '7', '--coeffs', '0,1,0,0,0,0,0']) == 1
    assert capsys.readouterr().out.strip() == 'not PP'


def test_is_exceptional(capsys):
    assert main(['is-exceptional', '--r', '4', '--coeffs', '0,0,0,0,0,0,0']) == 0
    assert capsys.readouterr().out.strip() == 'exceptional'
    assert main(['is-exceptional', '--r', '4', '--coeffs', '0,1,e,0,e^3,e^5,e']) == 1
    assert capsys.readouterr().out.strip() == 'not exceptional'


def test_normalize(capsys):
    assert main(['normalize', '--r', '4', '--coeffs', '0,1,e,0,e^3,e^5,e']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith('(0, 15, 1, 0, 3, 5, 1) | x^8 + x^6')
    assert lines[1] == 'witness (s, t, u, v) = (1, 1, 0, 0)'


def test_hc_symbolic(capsys):
    assert main(['hc', '--r', '4', '--k', '3']) == 0
    assert capsys.readouterr().out.strip() == 'a5^3 + a3*a6^2 + a4^2*a7 + a1*a7^2'
    assert main(['hc', '--r', '4', '--k', '3', '--set', 'a7=0', '--set', 'a6=1']) == 0
    assert capsys.readouterr().out.strip() == 'a5^3 + a3'


def test_hc_mixed(capsys):
    assert main(['hc', '--r', '4', '--k', '3', '--set', 'a7=0', '--set', 'a6=1', '--set', 'a5=e']) == 0
    assert capsys.readouterr().out.strip() == 'a3 + e^3'


def test_hc_concrete(capsys):
    values = ['a7=0', 'a6=1', 'a5=e', 'a4=0', 'a3=e^3', 'a2=e^5', 'a1=e']
    argv = ['hc', '--r', '4', '--k', '3']
    for item in values:
        argv += ['--set', item]
    assert main(argv) == 0
    assert capsys.readouterr().out.strip() == '0'
    argv[4] = '14'
    assert main(argv + ['--basis']) == 0
    assert capsys.readouterr().out.strip().startswith('0x')


def test_bad_input_exits_2(capsys):
    assert main(['is-pp', '--r', '4', '--coeffs', '0,1,x,0,0,0,0']) == 2
    assert 'error' in capsys.readouterr().err
    assert main(['hc', '--r', '4', '--k', '3', '--set', 'b3=1']) == 2
    assert main(['classify', '--r', '3']) == 2
    assert main(['classify', '--r', '12']) == 2
    assert main(['is-exceptional', '--r', '3', '--coeffs', '0,0,0,0,0,0,0']) == 2


def test_usage_errors_exit_2(capsys):
    assert main(['verify', '--r', '6']) == 2
    assert main(['no-such-command']) == 2
    assert main([]) == 2


def test_output_path(tmp_path):
    path = output_path(tmp_path, 5, 'json')
    assert path.parent == tmp_path
    assert path.name.endswith('_classify_r5.json')
    assert output_path(tmp_path, 4, 'text').suffix == '.txt'


@pytest.mark.slow
def test_classify_writes_json(tmp_path, capsys):
    assert main(['classify', '--r', '4', '--format', 'json', '--frobenius-reduce', '--out', str(tmp_path)]) == 0
    written = capsys.readouterr().out.strip()
    files = list(tmp_path.glob('*_classify_r4.json'))
    assert [str(f) for f in files] == [written]
    payload = json.loads(files[0].read_text())
    assert payload['r'] == 4
    assert payload['modulus'] == '0x13'
    assert len(payload['classes']) == 39


@pytest.mark.slow
def test_classify_text(capsys):
    assert main(['classify', '--r', '5', '--frobenius-reduce']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert '(0, 31, 1, 0, 26, 25, 0) | x^8 + x^6 + e*x^5 + e^26*x^3 + e^25*x^2' in lines


@pytest.mark.slow
def test_verify(capsys):
    assert main(['verify', '--r', '8']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert all(line.startswith('PASS') for line in lines[:-1])
    assert lines[-1] == 'no non-exceptional degree-8 PP over F_{2^8}'

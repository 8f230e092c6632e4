# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import io
import json

import pytest

from omlbox.algebra import serialize_dyn_algebra, tabulate
from omlbox.data import gen_boolean
from omlbox.lattice import serialize_lattice
from omlbox.quick_start import cli_main, run_omlbox
from omlbox.utils import InputError

QUICK = ['--samples', '300', '--morphism_samples=50', '--law_samples=4']


def run(argv):
    out = io.StringIO()
    status = cli_main(argv, stdout=out)
    return status, out.getvalue()


def run_json(argv):
    status, text = run(argv + ['--format', 'json'])
    return status, json.loads(text)


def test_verify_oml_passes_on_mo2():
    status, text = run(['verify-oml', 'catalog:mo:2'])
    assert status == 0
    assert 'overall: pass' in text


def test_verify_oml_reports_the_orthomodularity_witness():
    status, report = run_json(['verify-oml', 'catalog:o6'])
    assert status == 1
    assert report['overall'] == 'fail'
    assert report['orthomodular']['witnesses'] == [{'clause': 'orthomodular', 'witness': [1, 2]}]
    assert report['details']['lattice'] == 'catalog:o6'


@pytest.mark.parametrize(
    'argv', [
        ['verify-oml', 'missing.json'],
        ['frobnicate', 'catalog:mo:2'],
        ['verify-oml', 'catalog:mo:9'],
        ['verify-oml', 'catalog:cube'],
        ['roundtrip', 'catalog:mo:2', '--seed', '-1'],
        ['verify-oml', 'catalog:mo:2', '--format', 'yaml'],
        ['verify-oml'],
    ]
)
def test_bad_input_exits_with_two(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    status, text = run(argv)
    assert status == 2
    assert text == ''
    assert 'omlbox: error:' in capsys.readouterr().err


@pytest.mark.parametrize(
    'data', [
        {'n': 3, 'leq': [[0, 1], [1, 2]], 'ortho': [2, 1, 0]},
        {'n': 2, 'leq': [[0, 1]], 'ortho': ['x', 'y']},
        {'n': 2, 'leq': [5], 'ortho': [1, 0]},
        {'n': 2, 'leq': [[0, 1]], 'ortho': [1.7, 0.2]},
    ]
)
def test_malformed_lattice_file_exits_with_two(data, tmp_path, capsys):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    status, text = run(['verify-oml', str(path)])
    assert status == 2
    assert text == ''
    assert 'omlbox: error:' in capsys.readouterr().err


def test_roundtrip_json_is_deterministic():
    argv = ['roundtrip', 'catalog:mo2', '--seed', '7'] + QUICK
    first_status, first = run(argv + ['--format', 'json'])
    second_status, second = run(argv + ['--format', 'json'])
    assert first_status == second_status == 0
    assert first == second
    report = json.loads(first)
    assert report['lattice'] == 'catalog:mo:2'
    assert report['seed'] == 7
    assert report['monoid_size'] == 18
    assert report['overall'] == 'sampled-pass'


def test_roundtrip_on_a_non_orthomodular_lattice():
    status, report = run_json(['roundtrip', 'catalog:o6'] + QUICK)
    assert status == 1
    assert report['stages']['lattice']['status'] == 'fail'
    assert report['stages']['naturality'] == {'status': 'skipped'}


def test_gamma_writes_its_report(tmp_path):
    path = tmp_path / 'mo2-gamma.json'
    status, printed = run_json(['gamma', 'catalog:mo:2', '--report', str(path)])
    assert status == 0
    written = json.loads(path.read_text(encoding='utf-8'))
    assert written == printed
    assert written['details']['monoid']['size'] == 18
    assert written['details']['algebra']['carrier_log2'] == 18.0
    assert written['gamma_structure']['status'] == 'pass'


def test_automorphisms_of_mo3():
    status, report = run_json(['automorphisms', 'catalog:mo:3'])
    assert status == 0
    assert report['details']['count'] == 48
    assert len(report['details']['automorphisms']) == 48


def test_automorphism_guard_is_an_input_error():
    status, _ = run(['automorphisms', 'catalog:boolean:5', '--automorphism_guard=8'])
    assert status == 2


def test_check_foda_on_a_lattice_file(tmp_path):
    path = tmp_path / 'b1.json'
    path.write_text(serialize_lattice(gen_boolean(1)), encoding='utf-8')
    status, report = run_json(['check-foda', str(path), '--max_word_len=2'])
    assert status == 0
    assert report['overall'] == 'pass'
    assert report['quote_homomorphism']['details']['max_word_len'] == 2
    assert report['details']['source'] == str(path)


def test_check_foda_on_an_explicit_algebra(tmp_path, gamma_b1):
    path = tmp_path / 'algebra.json'
    path.write_text(serialize_dyn_algebra(tabulate(gamma_b1)), encoding='utf-8')
    status, report = run_json(['check-foda', str(path)])
    assert status == 0
    assert [report['FODA{}'.format(i)]['status'] for i in range(1, 8)] == ['pass'] * 7


def test_check_foda_on_o6_is_a_verification_failure():
    status, report = run_json(['check-foda', 'catalog:o6'])
    assert status == 1
    assert report['error'] == 'OrthomodularityError'
    assert report['witness'] == [1, 2]


def test_naturality_command():
    status, report = run_json(['naturality', 'catalog:boolean:2'])
    assert status == 0
    assert report['details']['automorphisms'] == 2
    assert report['mu_naturality']['status'] == 'pass'
    assert report['lambda_naturality']['status'] == 'pass'


def test_run_omlbox_api():
    status, report = run_omlbox('roundtrip', 'catalog:boolean:1', config_dict={'seed': 3})
    assert status == 0
    assert report['overall'] == 'pass'
    assert report['seed'] == 3
    with pytest.raises(InputError):
        run_omlbox('frobnicate', 'catalog:boolean:1')
    with pytest.raises(InputError):
        run_omlbox('roundtrip', None)
    with pytest.raises(InputError):
        run_omlbox('verify-oml', 'catalog:boolean:1', config_dict={'format': 'yaml'})

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import pytest

from omlbox.checker import LatticeChecker
from omlbox.config import Config
from omlbox.utils import Budget, TupleSource, Verdict, merge_verdicts, InputError, CheckMode, Status, make_rng


def test_defaults():
    config = Config()
    assert config['seed'] == 0
    assert config['samples'] == 10000
    assert config['exhaustive_threshold'] == 2 ** 20
    assert config['format'] == 'text'
    assert config['report'] is None
    assert config['command'] is None
    assert config['no_such_key'] is None
    assert 'samples' in config


def test_command_properties_override_the_overall_ones():
    assert Config(command='naturality')['law_samples'] == 64
    assert Config(command='roundtrip')['law_samples'] == 32
    assert Config(command='roundtrip')['max_word_len'] == 3
    assert Config(command='check-foda')['max_word_len'] == 4


def test_priority(tmp_path):
    path = tmp_path / 'override.yaml'
    path.write_text('samples: 100\nmax_word_len: 2\nexhaustive_threshold: 64\n', encoding='utf-8')
    config = Config(
        command='check-foda',
        config_file_list=[str(path)],
        config_dict={'samples': 300, 'max_word_len': 3},
        cmd_args=['--samples=200']
    )
    assert config['samples'] == 200
    assert config['max_word_len'] == 3
    assert config['exhaustive_threshold'] == 64


def test_command_line_values_are_typed():
    config = Config(cmd_args=['--quote-samples=5', '--state=DEBUG', '--show_progress=True', 'stray'])
    assert config['quote_samples'] == 5
    assert config['state'] == 'DEBUG'
    assert config['show_progress'] is True


def test_conflicting_command_line_values():
    with pytest.raises(InputError):
        Config(cmd_args=['--samples=1', '--samples=2'])


def test_checker_rejects_a_bad_budget():
    with pytest.raises(InputError):
        LatticeChecker(Config(config_dict={'samples': 0}))


def test_budget_from_config():
    config = Config(command='roundtrip', config_dict={'seed': 9, 'samples': 11})
    assert Budget.from_config(config) == Budget(exhaustive_threshold=2 ** 20, samples=11, seed=9)
    assert Budget.for_morphisms(config) == Budget(exhaustive_threshold=4096, samples=500, seed=9)


def test_verdicts_keep_their_first_witnesses():
    verdict = Verdict('law')
    assert verdict.passed and verdict.status == Status.PASS
    for i in range(20):
        verdict.fail('clause', [i])
    assert not verdict
    assert len(verdict.witnesses) == 8
    assert verdict.witnesses[0] == {'clause': 'clause', 'witness': [0]}
    assert verdict.to_dict()['status'] == 'fail'


def test_merge_verdicts():
    exact = Verdict('exact')
    sampled = Verdict('sampled', mode=CheckMode.SAMPLED, samples=10, seed=4)
    broken = Verdict('broken').fail('law', [1, 2])
    merged = merge_verdicts('all', [exact, sampled])
    assert merged.passed and merged.mode == CheckMode.SAMPLED
    assert merged.status == Status.SAMPLED_PASS
    assert merged.samples == 10 and merged.seed == 4
    merged = merge_verdicts('all', [exact, broken])
    assert not merged.passed
    assert merged.witnesses == [{'clause': 'broken.law', 'witness': [1, 2]}]
    assert merged.details == {'exact': 'pass', 'broken': 'fail'}


def test_tuple_sources():
    exhaustive = TupleSource(3, 2, Budget(exhaustive_threshold=9), 'test')
    assert exhaustive.mode == CheckMode.EXHAUSTIVE
    assert list(exhaustive) == [(i, j) for i in range(3) for j in range(3)]
    budget = Budget(exhaustive_threshold=8, samples=25, seed=5)
    sampled = TupleSource(3, 2, budget, 'test')
    assert sampled.mode == CheckMode.SAMPLED and len(sampled) == 25
    assert list(sampled) == list(TupleSource(3, 2, budget, 'test'))
    assert list(sampled) != list(TupleSource(3, 2, budget, 'other'))
    verdict = sampled.stamp(Verdict('law'))
    assert verdict.samples == 25 and verdict.seed == 5


def test_streams_are_independent_of_each_other():
    first = make_rng(7, 'a').integers(0, 2 ** 32, size=4).tolist()
    make_rng(7, 'b').integers(0, 2 ** 32, size=100)
    assert make_rng(7, 'a').integers(0, 2 ** 32, size=4).tolist() == first

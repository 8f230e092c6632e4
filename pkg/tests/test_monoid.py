# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import copy

import numpy as np
import pytest

from omlbox.data import parse_catalog_spec
from omlbox.lattice import EndoMap, sasaki_projection
from omlbox.monoid import build_monoid, check_involutive_monoid, check_star_adjointness, check_witness_words
from omlbox.utils import OrthomodularityError, SizeGuardError


@pytest.mark.parametrize(
    'spec, size', [
        ('boolean:0', 1),
        ('boolean:1', 2),
        ('boolean:2', 4),
        ('boolean:3', 8),
        ('boolean:4', 16),
        ('mo:1', 4),
        ('mo:2', 18),
        ('mo:3', 38),
    ]
)
def test_monoid_sizes(spec, size):
    monoid = build_monoid(parse_catalog_spec(spec).build())
    assert len(monoid) == size
    assert monoid.audit['status'] == 'pass'
    assert monoid.audit['failures'] == 0


@pytest.mark.parametrize('spec', ['boolean:2', 'mo:2', 'mo:3', 'product(mo:2,boolean:1)'])
def test_monoid_laws(spec):
    monoid = build_monoid(parse_catalog_spec(spec).build())
    assert check_involutive_monoid(monoid).passed
    assert check_star_adjointness(monoid).passed
    assert check_witness_words(monoid).passed


def test_generators_come_first(mo2):
    monoid = build_monoid(mo2)
    for m in range(mo2.size):
        assert monoid.elements[m] == sasaki_projection(mo2, m)
        assert monoid.witness_words[m] == (m, )
        assert monoid.star(m) == m
    assert monoid.identity == mo2.top
    assert monoid.elements[monoid.identity] == EndoMap.identity(mo2)


def test_composite_of_two_projections(mo2):
    monoid = build_monoid(mo2)
    a, b = mo2.index('a'), mo2.index('b')
    f = monoid.compose(a, b)
    assert monoid.elements[f].values.tolist() == [0, 1, 1, 1, 0, 1]
    assert monoid.witness_words[f] == (a, b)
    assert monoid.label(f) == 'π[a]∘π[b]'
    assert monoid.evaluate_word((a, b)) == f
    assert monoid.star(f) == monoid.compose(b, a)
    assert monoid.star(f) != f


def test_witness_words_are_shortest(mo2):
    monoid = build_monoid(mo2)
    lengths = [len(word) for word in monoid.witness_words]
    assert lengths == sorted(lengths)
    assert max(lengths) == 3


def test_compose_without_a_table_agrees(mo2):
    tabled = build_monoid(mo2)
    plain = build_monoid(mo2, compose_table_limit=0)
    assert plain.compose_table is None
    size = len(tabled)
    for f in range(size):
        for g in range(size):
            assert plain.compose(f, g) == tabled.compose(f, g)


def test_boolean_monoid_is_meets(b2):
    monoid = build_monoid(b2)
    for f in range(len(monoid)):
        assert monoid.witness_words[f] == (f, )
    assert monoid.compose(1, 2) == 0
    assert monoid.compose(3, 1) == 1


def test_non_orthomodular_lattice_is_rejected(o6):
    with pytest.raises(OrthomodularityError) as info:
        build_monoid(o6)
    assert info.value.witness == [1, 2]


def test_cap(mo2):
    with pytest.raises(SizeGuardError):
        build_monoid(mo2, cap=10)


def test_report(mo2):
    report = build_monoid(mo2).report()
    assert report['size'] == 18
    assert report['generators'] == 6
    assert sum(report['word_length_histogram'].values()) == 18
    assert report['word_length_histogram']['1'] == 6
    assert report['compose_table']


def test_identity_star_breaks_the_anti_homomorphism(mo2):
    broken = copy.copy(build_monoid(mo2))
    broken.star_of = np.arange(len(broken))
    verdict = check_involutive_monoid(broken)
    assert not verdict.passed
    assert 'anti_homomorphism.anti_homomorphism' in verdict.failed_clauses()
    assert verdict.details['involution'] == 'pass'

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import pytest

from omlbox.algebra import check_foda_morphism, tabulate
from omlbox.config import Config
from omlbox.data import parse_catalog_spec
from omlbox.equivalence import mu_component, check_mu_naturality, lambda_component, check_lambda_bijective, \
    check_lambda_normal_forms, check_lambda_word_definition, check_lambda_neg, check_lambda_naturality, \
    RoundtripReport, roundtrip
from omlbox.functors import gamma_arrow, psi_object
from omlbox.lattice import OrthoMorphism, check_ortho_iso, enumerate_automorphisms
from omlbox.utils import CheckMode

QUICK = {'seed': 7, 'samples': 300, 'morphism_samples': 60, 'law_samples': 4, 'quote_samples': 2}


def quick_config(**overrides):
    config_dict = dict(QUICK)
    config_dict.update(overrides)
    return Config(command='roundtrip', config_dict=config_dict)


@pytest.mark.parametrize('name', ['b1', 'b2', 'mo2'])
def test_mu_is_an_ortho_isomorphism(name, request):
    lattice = request.getfixturevalue(name)
    algebra = request.getfixturevalue('gamma_' + name)
    mu = mu_component(lattice, algebra)
    assert mu.target is psi_object(algebra)
    assert check_ortho_iso(mu).passed


def test_mu_turns_lattice_operations_into_algebra_operations(mo2, gamma_mo2):
    mu = mu_component(mo2, gamma_mo2)
    psi = psi_object(gamma_mo2)
    for m in range(mo2.size):
        assert mu(mo2.perp(m)) == psi.index_of(gamma_mo2.neg(gamma_mo2.projection(m)))
        for n in range(mo2.size):
            vee = gamma_mo2.vee([gamma_mo2.projection(m), gamma_mo2.projection(n)])
            assert mu(mo2.join(m, n)) == psi.index_of(vee)
            assert psi.elements[mu(mo2.meet(m, n))] == \
                gamma_mo2.wedge([gamma_mo2.projection(m), gamma_mo2.projection(n)])


def test_mu_naturality(mo2, gamma_mo2, b2, gamma_b2):
    mu = mu_component(mo2, gamma_mo2)
    for k in enumerate_automorphisms(mo2):
        assert check_mu_naturality(k, gamma_mo2, gamma_mo2, mu, mu).passed
    swap = OrthoMorphism(b2, b2, [0, 2, 1, 3])
    assert check_mu_naturality(swap, gamma_b2, gamma_b2).passed


def test_lambda_on_the_smallest_algebra(gamma_b1):
    lam = lambda_component(gamma_b1)
    assert len(lam.target.monoid) == 2
    assert lam(gamma_b1.zero) == lam.target.zero
    assert len(lam(gamma_b1.zero)) == 0
    assert lam(gamma_b1.unit) == lam.target.unit
    assert lam(gamma_b1.top) == lam.target.top
    assert check_foda_morphism(lam).passed


@pytest.mark.parametrize('name', ['gamma_b2', 'gamma_mo2'])
def test_lambda_checks(name, small_budget, request):
    algebra = request.getfixturevalue(name)
    lam = lambda_component(algebra)
    assert len(lam.target.monoid) == len(algebra.monoid)
    assert check_foda_morphism(lam, small_budget).passed
    assert check_lambda_bijective(lam, small_budget).passed
    assert check_lambda_normal_forms(lam, small_budget).passed
    assert check_lambda_word_definition(lam).passed
    assert check_lambda_neg(lam, small_budget).passed


def test_lambda_bijectivity_modes(gamma_b2, gamma_mo2, small_budget):
    assert check_lambda_bijective(lambda_component(gamma_b2), small_budget).mode == CheckMode.EXHAUSTIVE
    assert check_lambda_bijective(lambda_component(gamma_mo2), small_budget).mode == CheckMode.STRUCTURAL


def test_lambda_on_an_explicit_table(gamma_b1):
    table = tabulate(gamma_b1)
    lam = lambda_component(table)
    assert lam(table.zero) == lam.target.zero
    assert lam(table.unit) == lam.target.unit
    assert check_foda_morphism(lam).passed
    assert check_lambda_bijective(lam).passed
    assert check_lambda_neg(lam).passed


def test_lambda_naturality(gamma_b2, b2, gamma_mo2, mo2, small_budget):
    lam = lambda_component(gamma_b2)
    swap = gamma_arrow(OrthoMorphism(b2, b2, [0, 2, 1, 3]), gamma_b2)
    assert check_lambda_naturality(swap, lam, lam, small_budget).passed
    lam = lambda_component(gamma_mo2)
    for k in enumerate_automorphisms(mo2)[:3]:
        assert check_lambda_naturality(gamma_arrow(k, gamma_mo2), lam, lam, small_budget).passed


@pytest.mark.parametrize('spec, overall', [('boolean:1', 'pass'), ('boolean:2', 'pass'), ('mo:2', 'sampled-pass')])
def test_roundtrip_passes(spec, overall):
    report = roundtrip(parse_catalog_spec(spec).build(), quick_config(), 'catalog:' + spec)
    assert report.completed
    assert report.failed_stage() is None
    result = report.to_dict()
    assert result['overall'] == overall, result
    assert result['lattice'] == 'catalog:' + spec
    assert set(result['stages']) == set(RoundtripReport.STAGES)
    assert result['foda_report']['overall'] in ('pass', 'sampled-pass')


def test_roundtrip_on_mo3():
    report = roundtrip(parse_catalog_spec('mo:3').build(), quick_config(), 'catalog:mo:3')
    assert report.passed and report.completed
    assert report.monoid_size == 38
    assert report.carrier_log2 == 38.0
    assert report.details['automorphisms'] == 48
    assert report.details['automorphism_coverage'] == 'full'


def test_roundtrip_with_identity_only_automorphisms():
    report = roundtrip(parse_catalog_spec('mo:2').build(), quick_config(automorphism_guard=4), 'catalog:mo:2')
    assert report.passed
    assert report.details['automorphisms'] == 1
    assert report.details['automorphism_coverage'] == 'identity-only'


def test_roundtrip_stops_at_the_first_failing_stage(o6):
    report = roundtrip(o6, quick_config(), 'catalog:o6')
    assert report.failed_stage() == 'lattice'
    assert not report.completed
    result = report.to_dict()
    assert result['overall'] == 'fail'
    assert result['stages']['lattice']['status'] == 'fail'
    for stage in RoundtripReport.STAGES[1:]:
        assert result['stages'][stage] == {'status': 'skipped'}
    assert result['monoid_size'] is None and result['foda_report'] is None
    witnesses = result['stages']['lattice']['witnesses']
    assert {'clause': 'orthomodular.orthomodular', 'witness': [1, 2]} in witnesses

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import numpy as np
import pytest

from omlbox.algebra import FodaMorphism, check_foda_morphism, check_tilde_restriction, identity_foda
from omlbox.data import gen_boolean, gen_product
from omlbox.functors import GammaAlgebra, GammaMorphism, gamma_arrow, psi_object, psi_arrow, check_gamma_foda_morphism, \
    check_gamma_equivariance, check_gamma_minimality, check_gamma_structure, check_functor_laws, \
    check_both_functor_laws
from omlbox.lattice import EndoMap, OrthoMorphism, enumerate_automorphisms, find_isomorphisms, identity_ortho
from omlbox.utils import ConsistencyError, InputError, CheckMode


class LeftTranslation(GammaMorphism):
    """Applies ``k`` after a monoid element but never ``k⁻¹`` before it."""

    def conjugate_member(self, a):
        values = self.iso.mapping[self.source.monoid.elements[a].values]
        image = self.target.monoid.index_of(EndoMap(self.target.lattice, values))
        if image is None:
            raise ConsistencyError('translated element is not in the monoid', a)
        return image


class EmptyNegAlgebra(GammaAlgebra):
    """``neg`` sends the full set to the empty set."""

    def neg(self, k):
        if k == self.top:
            return self.zero
        return super(EmptyNegAlgebra, self).neg(k)


def test_gamma_structure(gamma_b1, gamma_b2, gamma_mo2):
    for algebra in (gamma_b1, gamma_b2, gamma_mo2):
        assert check_gamma_structure(algebra).passed
        assert algebra.tilde_set() == sorted(algebra.projection(m) for m in range(algebra.lattice.size))
        assert algebra.neg(algebra.zero) == algebra.unit


def test_gamma_structure_sees_every_image_of_neg(gamma_b2):
    broken = EmptyNegAlgebra(gamma_b2.monoid)
    assert broken.zero in broken.tilde_set()
    verdict = check_gamma_structure(broken)
    assert not verdict.passed
    assert 'tilde' in verdict.failed_clauses()


def test_gamma_minimality(gamma_b2, gamma_mo2, small_budget):
    assert check_gamma_minimality(gamma_b2, small_budget).mode == CheckMode.EXHAUSTIVE
    verdict = check_gamma_minimality(gamma_mo2, small_budget)
    assert verdict.passed and verdict.mode == CheckMode.STRUCTURAL
    assert verdict.details['closure_size'] == 19


def test_gamma_of_a_swap_is_a_morphism(gamma_b2, b2, small_budget):
    swap = OrthoMorphism(b2, b2, [0, 2, 1, 3])
    arrow = gamma_arrow(swap, gamma_b2)
    assert arrow.target is gamma_b2
    assert check_foda_morphism(arrow, small_budget).passed
    assert check_gamma_equivariance(arrow, small_budget).passed
    assert arrow(gamma_b2.projection(1)) == gamma_b2.projection(2)
    verdict = check_gamma_foda_morphism(swap, gamma_b2, budget=small_budget)
    assert verdict.passed and verdict.name == 'gamma_foda_morphism'


def test_mo2_automorphisms_act_on_the_set_algebra(gamma_mo2, mo2, small_budget):
    for k in enumerate_automorphisms(mo2):
        arrow = gamma_arrow(k, gamma_mo2)
        assert check_foda_morphism(arrow, small_budget).passed
        assert check_gamma_equivariance(arrow, small_budget).passed
        for m in range(mo2.size):
            assert arrow(gamma_mo2.projection(m)) == gamma_mo2.projection(k(m))


def test_translation_without_conjugation_fails(gamma_b2, b2, small_budget):
    broken = LeftTranslation(OrthoMorphism(b2, b2, [0, 2, 1, 3]), gamma_b2, gamma_b2)
    verdict = check_foda_morphism(broken, small_budget)
    assert not verdict.passed
    assert 'unit.unit' in verdict.failed_clauses()


def test_gamma_between_isomorphic_lattices(b2):
    square = gen_product(gen_boolean(1), gen_boolean(1))
    iso = find_isomorphisms(square, b2)[0]
    arrow = gamma_arrow(iso)
    assert arrow.source.lattice is square and arrow.target.lattice is b2
    assert check_foda_morphism(arrow).passed
    assert check_tilde_restriction(arrow).passed


def test_functor_laws(gamma_mo2, mo2, small_budget):
    automorphisms = enumerate_automorphisms(mo2)
    assert check_functor_laws('gamma', gamma_mo2, automorphisms, small_budget, law_samples=8).passed
    arrows = [gamma_arrow(k, gamma_mo2) for k in automorphisms]
    assert check_functor_laws('psi', gamma_mo2, arrows).passed
    verdict = check_both_functor_laws(gamma_mo2, automorphisms, small_budget, law_samples=8)
    assert verdict.passed
    assert verdict.details == {'gamma_functor': 'sampled-pass', 'psi_functor': 'pass'}


def test_functor_laws_on_a_small_carrier(gamma_b2, b2, small_budget):
    verdict = check_functor_laws('gamma', gamma_b2, enumerate_automorphisms(b2), small_budget)
    assert verdict.passed and verdict.mode == CheckMode.EXHAUSTIVE


def test_unknown_functor_direction(gamma_b1):
    with pytest.raises(InputError):
        check_functor_laws('bogus', gamma_b1, [])


def test_psi_of_a_set_algebra_is_the_lattice(gamma_mo2, mo2):
    lattice = psi_object(gamma_mo2)
    assert lattice.size == mo2.size
    assert psi_object(gamma_mo2) is lattice
    isos = find_isomorphisms(mo2, lattice)
    assert len(isos) == 8
    assert lattice.index_of(gamma_mo2.projection(mo2.index('a'))) is not None


def test_psi_arrow_of_identity(gamma_mo2):
    restriction = psi_arrow(identity_foda(gamma_mo2))
    assert restriction.is_identity()
    assert restriction.source is psi_object(gamma_mo2)


def test_psi_arrow_of_gamma_arrow_follows_the_iso(gamma_mo2, mo2):
    lattice = psi_object(gamma_mo2)
    for k in enumerate_automorphisms(mo2):
        restriction = psi_arrow(gamma_arrow(k, gamma_mo2))
        for m in range(mo2.size):
            i = lattice.index_of(gamma_mo2.projection(m))
            assert restriction(i) == lattice.index_of(gamma_mo2.projection(k(m)))


def test_psi_arrow_rejects_maps_leaving_the_neg_image(gamma_b2):
    constant = FodaMorphism(gamma_b2, gamma_b2, lambda k: gamma_b2.top)
    with pytest.raises(ConsistencyError):
        psi_arrow(constant)
    assert not check_tilde_restriction(constant).passed


def test_identity_ortho_gives_identity_arrow(gamma_mo2, mo2):
    arrow = gamma_arrow(identity_ortho(mo2), gamma_mo2)
    for f in range(len(gamma_mo2.monoid)):
        assert arrow.member_image(f) == f
    assert np.array_equal(arrow.iso.mapping, np.arange(mo2.size))

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.functors.laws
####################
"""

import numpy as np

from omlbox.algebra import identity_foda
from omlbox.functors.gamma import gamma_arrow
from omlbox.functors.psi import psi_arrow
from omlbox.lattice import identity_ortho
from omlbox.utils import Verdict, Budget, CheckMode, InputError, VerificationError, make_rng, merge_verdicts


def _test_sets(algebra, pair_count, budget, law_samples):
    if algebra.carrier_size() * max(pair_count, 1) <= budget.exhaustive_threshold:
        return algebra.elements(), CheckMode.EXHAUSTIVE
    rng = make_rng(budget.seed, 'functor.sets')
    sets = [algebra.singleton(f) for f in range(len(algebra.monoid))]
    sets += [algebra.sample(rng) for _ in range(law_samples)]
    return sets, CheckMode.SAMPLED


def check_gamma_laws(algebra, automorphisms, budget=None, law_samples=32):
    r"""``Γ(id) = id`` and ``Γ(l∘k) = Γ(l)∘Γ(k)`` for all pairs of ``automorphisms``.

    Both sides are compared on every carrier element when the carrier is
    small, otherwise on every singleton plus ``law_samples`` seeded sets.

    Args:
        algebra (GammaAlgebra): the set algebra of the lattice
        automorphisms (list of OrthoMorphism): automorphisms of ``algebra.lattice``
        budget (Budget): sampling budget
        law_samples (int): extra random sets per pair

    Returns:
        Verdict: clauses ``identity`` and ``composition``
    """
    budget = budget or Budget()
    verdict = Verdict('gamma_functor')
    arrows = {tuple(k.to_list()): gamma_arrow(k, algebra) for k in automorphisms}
    sets, mode = _test_sets(algebra, len(automorphisms) ** 2, budget, law_samples)
    verdict.mode = mode
    if mode == CheckMode.SAMPLED:
        verdict.samples, verdict.seed = law_samples, budget.seed

    identity = gamma_arrow(identity_ortho(algebra.lattice), algebra)
    try:
        for a in sets:
            if identity(a) != a:
                verdict.fail('identity', algebra.witness(a))
                break
        for k in automorphisms:
            for l in automorphisms:
                composite = l.compose(k)
                arrow = arrows.get(tuple(composite.to_list())) or gamma_arrow(composite, algebra)
                first, second = arrows[tuple(k.to_list())], arrows[tuple(l.to_list())]
                for a in sets:
                    if arrow(a) != second(first(a)):
                        return verdict.fail('composition', {
                            'first': k.to_list(),
                            'second': l.to_list(),
                            'element': algebra.witness(a)
                        })
    except VerificationError as e:
        verdict.fail('transport', {'error': str(e), 'detail': e.witness})
    verdict.details['morphisms'] = len(automorphisms)
    return verdict


def check_psi_laws(algebra, morphisms):
    r"""``Ψ(id) = id`` and ``Ψ(φ∘ψ) = Ψ(φ)∘Ψ(ψ)`` for all pairs of endomorphisms in ``morphisms``.

    The restrictions are finite maps on ``K̃``, so both laws are checked exactly.

    Args:
        algebra (AbstractDynAlgebra): the common source and target
        morphisms (list of FodaMorphism): endomorphisms of ``algebra``

    Returns:
        Verdict: clauses ``identity`` and ``composition``
    """
    verdict = Verdict('psi_functor')
    try:
        identity = psi_arrow(identity_foda(algebra))
        if not (identity.mapping == np.arange(identity.source.size)).all():
            verdict.fail('identity', identity.to_list())
        restrictions = [psi_arrow(phi) for phi in morphisms]
        for i, phi in enumerate(morphisms):
            for j, psi in enumerate(morphisms):
                left = psi_arrow(phi.compose(psi))
                right = restrictions[i].compose(restrictions[j])
                if not (left.mapping == right.mapping).all():
                    return verdict.fail('composition', {'first': j, 'second': i})
    except VerificationError as e:
        verdict.fail('restriction', {'error': str(e), 'detail': e.witness})
    verdict.details['morphisms'] = len(morphisms)
    return verdict


def check_functor_laws(direction, algebra, morphisms, budget=None, law_samples=32):
    r"""Identity and composition preservation of ``Γ`` or ``Ψ``.

    Args:
        direction (str): ``'gamma'`` (``morphisms`` are lattice automorphisms) or
            ``'psi'`` (``morphisms`` are algebra endomorphisms)
        algebra (AbstractDynAlgebra): for ``'gamma'`` the set algebra of the lattice
        morphisms (list): the morphisms
        budget (Budget): sampling budget
        law_samples (int): extra random sets per pair for ``'gamma'``

    Returns:
        Verdict: the verdict of the chosen direction
    """
    if direction == 'gamma':
        return check_gamma_laws(algebra, morphisms, budget, law_samples)
    if direction == 'psi':
        return check_psi_laws(algebra, morphisms)
    raise InputError('unknown functor direction: {}'.format(direction))


def check_both_functor_laws(algebra, automorphisms, budget=None, law_samples=32):
    """Laws of ``Γ`` over ``automorphisms`` and of ``Ψ`` over their images under ``Γ``."""
    gamma = check_gamma_laws(algebra, automorphisms, budget, law_samples)
    arrows = [gamma_arrow(k, algebra) for k in automorphisms]
    psi = check_psi_laws(algebra, arrows)
    return merge_verdicts('functor_laws', [gamma, psi])

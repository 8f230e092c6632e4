# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.equivalence.naturality
#############################

The unit ``μ`` (lattice side) and counit ``λ`` (algebra side) of the
equivalence, with their naturality squares.
"""

from omlbox.algebra import FodaMorphism, carrier_tuples
from omlbox.functors import DynSet, gamma_object, gamma_arrow, psi_object, psi_arrow
from omlbox.lattice import OrthoMorphism, EndoMap, check_ortho_iso
from omlbox.utils import Verdict, Budget, CheckMode, ConsistencyError, VerificationError


def mu_component(lattice, algebra):
    r"""The isomorphism ``m -> {π_m}`` from a lattice onto ``Ψ(Γ(lattice))``.

    Args:
        lattice (OrthoLattice): the lattice
        algebra (GammaAlgebra): its set algebra

    Returns:
        OrthoMorphism: the component, already validated

    Raises:
        ConsistencyError: a singleton projection is missing from ``K̃`` or the map is not an isomorphism
    """
    psi = psi_object(algebra)
    mapping = []
    for m in range(lattice.size):
        position = psi.index_of(algebra.projection(m))
        if position is None:
            raise ConsistencyError('singleton projection is not in the image of neg', [m])
        mapping.append(position)
    component = OrthoMorphism(lattice, psi, mapping)
    verdict = check_ortho_iso(component)
    if not verdict.passed:
        raise ConsistencyError('m -> {π_m} is not an ortho-lattice isomorphism', verdict.witnesses)
    return component


def check_mu_naturality(iso, source_algebra, target_algebra, source_mu=None, target_mu=None):
    r"""``Ψ(Γ(k)) ∘ μ₁ = μ₂ ∘ k`` on every element of the source lattice.

    Args:
        iso (OrthoMorphism): the isomorphism ``k``
        source_algebra (GammaAlgebra): set algebra of ``k.source``
        target_algebra (GammaAlgebra): set algebra of ``k.target``
        source_mu (OrthoMorphism): ``μ₁``, computed when omitted
        target_mu (OrthoMorphism): ``μ₂``, computed when omitted

    Returns:
        Verdict: witness ``[m]``
    """
    verdict = Verdict('mu_naturality')
    source_mu = source_mu or mu_component(iso.source, source_algebra)
    target_mu = target_mu or mu_component(iso.target, target_algebra)
    try:
        top = psi_arrow(gamma_arrow(iso, source_algebra, target_algebra))
    except VerificationError as e:
        return verdict.fail('transport', {'error': str(e), 'detail': e.witness})
    for m in range(iso.source.size):
        if top(source_mu(m)) != target_mu(iso(m)):
            return verdict.fail('square', [m])
    return verdict


class LambdaMorphism(FodaMorphism):
    r"""``k -> {π-composite of s : s in the decomposition of k}`` into ``Γ(Ψ(K))``.

    Each word element ``s`` goes to the monoid element of ``Ψ(K)`` given by
    the restriction of its quotation ``⌜s⌝`` to ``K̃``.

    Args:
        source (AbstractDynAlgebra): the algebra ``K``
        target (GammaAlgebra): the set algebra of ``psi_object(K)``
    """

    def __init__(self, source, target):
        super(LambdaMorphism, self).__init__(source, target, self.transport)
        self.psi = psi_object(source)
        self._members = {}

    def member_of(self, s):
        member = self._members.get(s)
        if member is not None:
            return member
        values = [self.psi.index_of(self.source.quote(s, w)) for w in self.psi.elements]
        if None in values:
            raise ConsistencyError('quotation leaves the image of neg', self.source.witness(s))
        member = self.target.monoid.index_of(EndoMap(self.target.lattice, values))
        if member is None:
            raise ConsistencyError('restricted quotation is not a Sasaki composite', self.source.witness(s))
        self._members[s] = member
        return member

    def transport(self, k):
        return DynSet.of(self.target.monoid, {self.member_of(s) for s in self.source.decompose(k)})


def lambda_component(algebra, target=None, cap=100000, compose_table_limit=512):
    r"""The component of ``λ`` at ``algebra``.

    Args:
        algebra (AbstractDynAlgebra): an algebra passing the axiom checks
        target (GammaAlgebra): ``Γ(Ψ(algebra))``, built when omitted
        cap (int): monoid cap used when building the target
        compose_table_limit (int): composition table limit used when building the target

    Returns:
        LambdaMorphism: the component
    """
    if target is None:
        target = gamma_object(psi_object(algebra), cap=cap, compose_table_limit=compose_table_limit)
    return LambdaMorphism(algebra, target)


def check_lambda_bijective(component, budget=None):
    r"""``λ`` is a bijection.

    Word elements must go one-to-one onto the singletons of the target. When
    the carrier fits the budget every image is computed; otherwise the verdict
    is structural: by unique decomposition on both sides, a bijection of word
    elements extends to a bijection of carriers.

    Returns:
        Verdict: clauses ``span_bijection`` and ``carrier_bijection``
    """
    budget = budget or Budget()
    verdict = Verdict('lambda_bijective')
    source, target = component.source, component.target
    try:
        members = [component.member_of(s) for s in source.span()]
    except VerificationError as e:
        return verdict.fail('span_bijection', {'error': str(e), 'detail': e.witness})
    if sorted(members) != list(range(len(target.monoid))):
        return verdict.fail('span_bijection', {'images': members, 'monoid_size': len(target.monoid)})
    size = source.carrier_size()
    if size <= budget.exhaustive_threshold:
        images = set()
        for k in source.elements():
            images.add(component(k))
        if len(images) != size or target.carrier_size() != size:
            verdict.fail('carrier_bijection', {'images': len(images), 'carrier': size})
        return verdict
    verdict.mode = CheckMode.STRUCTURAL
    return verdict


def check_lambda_normal_forms(component, budget=None):
    r"""``λ`` maps the decomposition of ``k`` onto the decomposition of ``λ(k)``."""
    budget = budget or Budget()
    verdict = Verdict('lambda_normal_forms')
    source, target = component.source, component.target
    elements = carrier_tuples(source, 1, budget, 'lambda.normal_forms')
    for k, in elements:
        try:
            mapped = sorted(component(s) for s in source.decompose(k))
            if mapped != sorted(target.decompose(component(k))):
                verdict.fail('normal_form', [source.witness(k)])
        except VerificationError as e:
            verdict.fail('decomposition', {'element': source.witness(k), 'error': str(e)})
        if not verdict.passed:
            break
    return elements.stamp(verdict)


def check_lambda_word_definition(component):
    r"""For every word element, the product of the Sasaki projections of one of its ``K̃`` words
    is the monoid element that ``λ`` assigns to it."""
    verdict = Verdict('lambda_word_definition')
    source, target = component.source, component.target
    for s in source.span():
        letters = [component.psi.index_of(w) for w in source.span_word(s)]
        try:
            expected = component.member_of(s)
        except VerificationError as e:
            return verdict.fail('member', {'element': source.witness(s), 'error': str(e)})
        if target.monoid.evaluate_word(letters) != expected:
            return verdict.fail('word', {'element': source.witness(s), 'word': letters})
    return verdict


def check_lambda_neg(component, budget=None):
    r"""``λ(∼k) = ∼λ(k)``."""
    budget = budget or Budget()
    verdict = Verdict('lambda_neg')
    source, target = component.source, component.target
    elements = carrier_tuples(source, 1, budget, 'lambda.neg')
    for k, in elements:
        try:
            if component(source.neg(k)) != target.neg(component(k)):
                verdict.fail('neg', [source.witness(k)])
        except VerificationError as e:
            verdict.fail('transport', {'element': source.witness(k), 'error': str(e)})
        if not verdict.passed:
            break
    return elements.stamp(verdict)


def check_lambda_naturality(morphism, source_lambda, target_lambda, budget=None):
    r"""``Γ(Ψ(φ))(λ₁(k)) = λ₂(φ(k))`` for every ``k``.

    Args:
        morphism (FodaMorphism): ``φ`` from ``K₁`` to ``K₂``
        source_lambda (LambdaMorphism): ``λ`` at ``K₁``
        target_lambda (LambdaMorphism): ``λ`` at ``K₂``
        budget (Budget): sampling budget

    Returns:
        Verdict: witness ``[k]``
    """
    budget = budget or Budget()
    verdict = Verdict('lambda_naturality')
    try:
        top = gamma_arrow(psi_arrow(morphism), source_lambda.target, target_lambda.target)
    except VerificationError as e:
        return verdict.fail('transport', {'error': str(e), 'detail': e.witness})
    source = morphism.source
    elements = carrier_tuples(source, 1, budget, 'lambda.naturality')
    for k, in elements:
        try:
            if top(source_lambda(k)) != target_lambda(morphism(k)):
                verdict.fail('square', [source.witness(k)])
        except VerificationError as e:
            verdict.fail('transport', {'element': source.witness(k), 'error': str(e)})
        if not verdict.passed:
            break
    return elements.stamp(verdict)

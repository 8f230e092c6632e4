# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.algebra.morphism
#######################
"""

from omlbox.lattice import OrthoMorphism, check_ortho_iso
from omlbox.utils import Verdict, Budget, TupleSource, VerificationError, LatticeFormatError, merge_verdicts


class FodaMorphism(object):
    r"""A map between the carriers of two dynamic algebras.

    Args:
        source (AbstractDynAlgebra): domain
        target (AbstractDynAlgebra): codomain
        func (callable): the element map
    """

    def __init__(self, source, target, func):
        self.source = source
        self.target = target
        self.func = func

    def __call__(self, k):
        return self.func(k)

    def compose(self, other):
        """``self ∘ other``: apply ``other`` first."""
        return FodaMorphism(other.source, self.target, lambda k: self(other(k)))

    def __repr__(self):
        return '{}({!r} -> {!r})'.format(self.__class__.__name__, self.source, self.target)


def identity_foda(algebra):
    return FodaMorphism(algebra, algebra, lambda k: k)


def compose_foda(second, first):
    """``second ∘ first``."""
    return second.compose(first)


def carrier_tuples(algebra, arity, budget, stream):
    """A :class:`TupleSource` over the carrier of ``algebra``."""
    return TupleSource(
        algebra.carrier_size(), arity, budget, stream, getter=algebra.element_at, sampler=algebra.sample
    )


class _Probe(object):
    """Applies a morphism and turns hard failures into clause witnesses."""

    def __init__(self, morphism, verdict):
        self.morphism = morphism
        self.verdict = verdict

    def __call__(self, clause, k):
        try:
            return self.morphism(k)
        except VerificationError as e:
            self.verdict.fail(clause, {
                'element': self.morphism.source.witness(k),
                'error': str(e),
                'detail': e.witness
            })
            return None


def check_tilde_restriction(morphism):
    r"""The restriction of ``morphism`` to ``K̃`` is an ortho-lattice isomorphism onto ``K̃`` of the target.

    Returns:
        Verdict: clause ``tilde`` when an image leaves ``K̃``, otherwise the clauses of :func:`check_ortho_iso`
    """
    verdict = Verdict('tilde_restriction')
    source, target = morphism.source, morphism.target
    try:
        source_lattice, target_lattice = source.tilde_lattice(), target.tilde_lattice()
    except LatticeFormatError as e:
        return verdict.fail('tilde_lattice', {'error': str(e), 'detail': e.witness})
    probe = _Probe(morphism, verdict)
    mapping = []
    for k in source_lattice.elements:
        image = probe('tilde', k)
        if image is None:
            return verdict
        position = target_lattice.index_of(image)
        if position is None:
            return verdict.fail('tilde', {'element': source.witness(k), 'image': target.witness(image)})
        mapping.append(position)
    iso = check_ortho_iso(OrthoMorphism(source_lattice, target_lattice, mapping))
    for witness in iso.witnesses:
        verdict.fail('iso.' + witness['clause'], witness['witness'])
    return verdict


def check_foda_morphism(morphism, budget=None):
    r"""Check the six clauses of a morphism of dynamic algebras.

    ``K̃`` restriction is an ortho-lattice isomorphism; ``⊔`` and ``0``,
    ``⊙``, ``∼``, ``−*`` and the unit are preserved. Binary joins and zero
    stand for all finite joins. Unary clauses run over the carrier and binary
    ones over pairs, exhaustively when the budget allows. An element the map
    cannot transport is a witness of the clause being checked.

    Args:
        morphism (FodaMorphism): the map
        budget (Budget): sampling budget

    Returns:
        Verdict: merged verdict of the clauses
    """
    budget = budget or Budget()
    source, target = morphism.source, morphism.target

    unit = Verdict('unit')
    image = _Probe(morphism, unit)('unit', source.unit)
    if image is not None and image != target.unit:
        unit.fail('unit', {'image': target.witness(image), 'expected': target.witness(target.unit)})

    tilde = check_tilde_restriction(morphism)

    join = Verdict('join')
    probe = _Probe(morphism, join)
    image = probe('zero', source.zero)
    if image is not None and image != target.zero:
        join.fail('zero', {'image': target.witness(image)})
    mul = Verdict('mul')
    pairs = carrier_tuples(source, 2, budget, 'morphism.binary')
    for k, l in pairs:
        if join.passed:
            left, a, b = probe('join', source.join(k, l)), probe('join', k), probe('join', l)
            if None not in (left, a, b) and left != target.join(a, b):
                join.fail('join', [source.witness(k), source.witness(l)])
        if mul.passed:
            mprobe = _Probe(morphism, mul)
            left, a, b = mprobe('mul', source.mul(k, l)), mprobe('mul', k), mprobe('mul', l)
            if None not in (left, a, b) and left != target.mul(a, b):
                mul.fail('mul', [source.witness(k), source.witness(l)])
        if not join.passed and not mul.passed:
            break
    pairs.stamp(join)
    pairs.stamp(mul)

    neg = Verdict('neg')
    star = Verdict('star')
    singles = carrier_tuples(source, 1, budget, 'morphism.unary')
    for k, in singles:
        if neg.passed:
            nprobe = _Probe(morphism, neg)
            left, a = nprobe('neg', source.neg(k)), nprobe('neg', k)
            if None not in (left, a) and left != target.neg(a):
                neg.fail('neg', [source.witness(k)])
        if star.passed:
            sprobe = _Probe(morphism, star)
            left, a = sprobe('star', source.star(k)), sprobe('star', k)
            if None not in (left, a) and left != target.star(a):
                star.fail('star', [source.witness(k)])
        if not neg.passed and not star.passed:
            break
    singles.stamp(neg)
    singles.stamp(star)

    return merge_verdicts('foda_morphism', [tilde, join, mul, neg, star, unit])

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.functors.gamma
#####################

The dynamic algebra of finite sets of Sasaki monoid elements, and its
action on ortho-lattice isomorphisms by conjugation.
"""

from logging import getLogger

import numpy as np

from omlbox.algebra import AbstractDynAlgebra, FodaMorphism, carrier_tuples, check_foda_morphism
from omlbox.checker import check_foda3
from omlbox.lattice import EndoMap
from omlbox.monoid import build_monoid
from omlbox.utils import Verdict, Budget, ConsistencyError, VerificationError, merge_verdicts

CHUNK = 8


def _bits(mask):
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length() - 1)
        mask ^= low
    return members


class DynSet(object):
    r"""A finite set of Sasaki monoid elements.

    Stored as a bit mask over monoid indices, so equal sets have equal
    representations; ``members`` is the sorted index list.

    Args:
        monoid (SasakiMonoid): the monoid
        mask (int): bit ``i`` set iff element ``i`` is a member
    """

    __slots__ = ('monoid', 'mask')

    def __init__(self, monoid, mask=0):
        self.monoid = monoid
        self.mask = int(mask)

    @classmethod
    def of(cls, monoid, members):
        mask = 0
        for i in members:
            mask |= 1 << int(i)
        return cls(monoid, mask)

    @property
    def members(self):
        return tuple(_bits(self.mask))

    def __len__(self):
        return bin(self.mask).count('1')

    def __iter__(self):
        return iter(_bits(self.mask))

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        return isinstance(other, DynSet) and self.mask == other.mask and self.monoid is other.monoid

    def __hash__(self):
        return hash(self.mask)

    def __lt__(self, other):
        return (len(self), self.members) < (len(other), other.members)

    def to_list(self):
        return list(self.members)

    def __repr__(self):
        return '{' + ', '.join(self.monoid.label(i) for i in self.members) + '}'


class GammaAlgebra(AbstractDynAlgebra):
    r"""All finite subsets of the Sasaki monoid ``S`` of an orthomodular lattice.

    ``⊔`` is union with ``0 = ∅`` and top ``S``; ``A ⊙ B = {a∘b}``;
    ``∼A = {π_x}`` with ``x`` the complement of the join of ``a(1)`` over ``A``;
    ``−*`` acts elementwise; the unit is ``{π_1}``.

    The carrier has ``2^|S|`` elements and is never listed up front. When the
    composition table is available, products, stars and negations are read
    from per-byte lookup tables over the member mask.

    Args:
        monoid (SasakiMonoid): the monoid
    """

    def __init__(self, monoid):
        super(GammaAlgebra, self).__init__()
        self.monoid = monoid
        self.lattice = monoid.lattice
        self.n = len(monoid)
        self.chunks = (self.n + CHUNK - 1) // CHUNK
        self._full = (1 << self.n) - 1
        self._star_lut = self._build_lut(lambda b: 1 << monoid.star(b), lambda x, y: x | y, 0)
        self._top_lut = self._build_lut(
            lambda b: int(monoid.top_image[b]), self.lattice.join, self.lattice.bottom
        )
        self._mul_lut = None
        if monoid.compose_table is not None:
            self._mul_lut = [
                self._build_lut(lambda b, a=a: 1 << int(monoid.compose_table[a, b]), lambda x, y: x | y, 0)
                for a in range(self.n)
            ]

    def _build_lut(self, value_of, combine, neutral):
        table = []
        for c in range(self.chunks):
            row = [neutral] * 256
            for byte in range(1, 256):
                low = byte & -byte
                member = c * CHUNK + low.bit_length() - 1
                row[byte] = combine(row[byte ^ low], value_of(member)) if member < self.n else row[byte ^ low]
            table.append(row)
        return table

    def _bytes(self, mask):
        return [(c, mask >> (c * CHUNK) & 0xFF) for c in range(self.chunks) if mask >> (c * CHUNK) & 0xFF]

    def _set(self, mask):
        return DynSet(self.monoid, mask)

    def singleton(self, f):
        return DynSet(self.monoid, 1 << int(f))

    def projection(self, m):
        """``{π_m}``."""
        return self.singleton(self.monoid.generator_of[m])

    def supremum_of_images(self, k):
        r"""``⋁_{a ∈ k} a(1)`` in the lattice."""
        top = self.lattice.bottom
        for c, byte in self._bytes(k.mask):
            top = self.lattice.join(top, self._top_lut[c][byte])
        return top

    def join(self, k, l):
        return self._set(k.mask | l.mask)

    def leq(self, k, l):
        return k.mask & ~l.mask == 0

    def mul(self, k, l):
        if self._mul_lut is None:
            return DynSet.of(self.monoid, {self.monoid.compose(a, b) for a in k for b in l})
        pieces = self._bytes(l.mask)
        mask = 0
        for a in k:
            row = self._mul_lut[a]
            for c, byte in pieces:
                mask |= row[c][byte]
        return self._set(mask)

    def neg(self, k):
        complement = self.lattice.perp(self.supremum_of_images(k))
        return self.projection(complement)

    def star(self, k):
        mask = 0
        for c, byte in self._bytes(k.mask):
            mask |= self._star_lut[c][byte]
        return self._set(mask)

    @property
    def zero(self):
        return self._set(0)

    @property
    def unit(self):
        return self.projection(self.lattice.top)

    @property
    def top(self):
        return self._set(self._full)

    def carrier_size(self):
        return 2 ** self.n

    def carrier_log2(self):
        return float(self.n)

    def element_at(self, i):
        return self._set(i)

    def sample(self, rng):
        r"""A random subset, stratified by size.

        Nine draws in ten take a small geometric size and distinct random
        members; the rest keep every member with probability one half.
        """
        if rng.random() < 0.9:
            count = min(int(rng.geometric(0.35)) - 1, self.n)
            members = rng.choice(self.n, size=count, replace=False)
            return DynSet.of(self.monoid, members)
        bits = rng.integers(0, 2, size=self.n)
        return DynSet.of(self.monoid, np.flatnonzero(bits))

    def witness(self, k):
        return k.to_list()

    def tilde_set(self):
        """``K̃``: the full image of ``∼`` on small carriers, else the images of ``∅`` and the projections."""
        if self._tilde is None and self.carrier_size() <= Budget().exhaustive_threshold:
            return super(GammaAlgebra, self).tilde_set()
        if self._tilde is None:
            images = {self.neg(self.zero)}
            images.update(self.neg(self.projection(m)) for m in range(self.lattice.size))
            self._tilde = sorted(images)
        return self._tilde

    def describe(self):
        return {
            'lattice_size': self.lattice.size,
            'monoid_size': self.n,
            'carrier_log2': self.carrier_log2(),
            'tilde_size': len(self.tilde_set()),
            'span_size': len(self.span()),
        }

    def __repr__(self):
        return 'GammaAlgebra(monoid_size={})'.format(self.n)


def gamma_object(lattice, cap=100000, compose_table_limit=512, show_progress=False):
    r"""Build the dynamic algebra of finite subsets of the Sasaki monoid of ``lattice``.

    Args:
        lattice (OrthoLattice): an orthomodular lattice
        cap (int): largest monoid size accepted
        compose_table_limit (int): materialise the composition table up to this many elements
        show_progress (bool): display a progress bar while closing the monoid

    Returns:
        GammaAlgebra: the algebra
    """
    monoid = build_monoid(lattice, cap=cap, compose_table_limit=compose_table_limit, show_progress=show_progress)
    algebra = GammaAlgebra(monoid)
    getLogger().info('built the set algebra: |S| = {}, carrier 2^{}'.format(len(monoid), len(monoid)))
    return algebra


class GammaMorphism(FodaMorphism):
    r"""Conjugation ``A -> {k∘a∘k⁻¹ : a ∈ A}`` by an ortho-lattice isomorphism ``k``.

    The image of each monoid element is computed once, on first use, in two
    ways: by mapping its witness word letter by letter through ``k``, and by
    conjugating its function directly. Both must name the same element of the
    target monoid.

    Args:
        iso (OrthoMorphism): the isomorphism ``k``
        source (GammaAlgebra): the algebra of ``k.source``
        target (GammaAlgebra): the algebra of ``k.target``
    """

    def __init__(self, iso, source, target):
        super(GammaMorphism, self).__init__(source, target, self.transport)
        self.iso = iso
        self._inverse_mapping = iso.inverse().mapping
        self._images = {}

    def conjugate_member(self, a):
        source_monoid, target_monoid = self.source.monoid, self.target.monoid
        word = source_monoid.witness_words[a]
        via_word = target_monoid.evaluate_word([self.iso(m) for m in word])
        values = self.iso.mapping[source_monoid.elements[a].values[self._inverse_mapping]]
        direct = target_monoid.index_of(EndoMap(self.target.lattice, values))
        if direct is None or via_word != direct:
            raise ConsistencyError(
                'conjugate of a monoid element is missing from the target monoid', {
                    'member': a,
                    'word': list(word),
                    'via_word': via_word,
                    'direct': direct
                }
            )
        return direct

    def member_image(self, a):
        image = self._images.get(a)
        if image is None:
            image = self._images[a] = self.conjugate_member(a)
        return image

    def transport(self, k):
        mask = 0
        for a in k:
            mask |= 1 << self.member_image(a)
        return DynSet(self.target.monoid, mask)


def gamma_arrow(iso, source=None, target=None):
    r"""Send an ortho-lattice isomorphism to the conjugation morphism between set algebras.

    Args:
        iso (OrthoMorphism): the isomorphism
        source (GammaAlgebra): the algebra of ``iso.source``, built when omitted
        target (GammaAlgebra): the algebra of ``iso.target``; defaults to ``source``
            for automorphisms and is built otherwise

    Returns:
        GammaMorphism: the morphism
    """
    if source is None:
        source = gamma_object(iso.source)
    if target is None:
        target = source if iso.target is iso.source else gamma_object(iso.target)
    return GammaMorphism(iso, source, target)


def check_gamma_foda_morphism(iso, source=None, target=None, budget=None):
    """Check that the conjugation morphism of ``iso`` preserves every operation, see :func:`check_foda_morphism`."""
    verdict = check_foda_morphism(gamma_arrow(iso, source, target), budget)
    verdict.name = 'gamma_foda_morphism'
    return verdict


def check_gamma_equivariance(morphism, budget=None):
    r"""``Γ(k)(∼A) = ∼Γ(k)(A)``, and ``Γ(k⁻¹)`` is a two-sided inverse of ``Γ(k)``.

    Args:
        morphism (GammaMorphism): the morphism ``Γ(k)``
        budget (Budget): sampling budget

    Returns:
        Verdict: clauses ``equivariance``, ``left_inverse`` and ``right_inverse``
    """
    budget = budget or Budget()
    source, target = morphism.source, morphism.target
    inverse = GammaMorphism(morphism.iso.inverse(), target, source)

    forward = Verdict('equivariance')
    elements = carrier_tuples(source, 1, budget, 'gamma.equivariance')
    for k, in elements:
        try:
            image = morphism(k)
            if morphism(source.neg(k)) != target.neg(image):
                forward.fail('equivariance', [source.witness(k)])
            if inverse(image) != k:
                forward.fail('left_inverse', [source.witness(k)])
        except VerificationError as e:
            forward.fail('transport', {'element': source.witness(k), 'error': str(e), 'detail': e.witness})
        if not forward.passed:
            break
    elements.stamp(forward)

    backward = Verdict('right_inverse')
    elements = carrier_tuples(target, 1, budget, 'gamma.right_inverse')
    for l, in elements:
        try:
            if morphism(inverse(l)) != l:
                backward.fail('right_inverse', [target.witness(l)])
        except VerificationError as e:
            backward.fail('transport', {'element': target.witness(l), 'error': str(e), 'detail': e.witness})
        if not backward.passed:
            break
    elements.stamp(backward)
    return merge_verdicts('gamma_equivariance', [forward, backward])


def check_gamma_minimality(algebra, budget=None):
    r"""The set algebra is generated by the singleton projections under ``⊙``, ``⊔``, ``−*`` and ``∼``."""
    verdict = check_foda3(algebra, budget or Budget())
    verdict.name = 'gamma_minimality'
    return verdict


def check_gamma_structure(algebra):
    r"""Closed-form facts about the set algebra, checked exhaustively on ``K̃`` and ``⟨K̃⟩``.

    - ``∼∼{π_m} = {π_m}`` for every ``m``;
    - ``K̃`` is exactly the singletons ``{π_m}``;
    - ``⌜{π_p}⌝({π_q}) = {π_{π_p(q)}}`` for all ``p, q``;
    - ``⟨K̃⟩`` is exactly the singletons of monoid elements.

    Returns:
        Verdict: one witness per violated clause
    """
    verdict = Verdict('gamma_structure')
    lattice, monoid = algebra.lattice, algebra.monoid
    for m in range(lattice.size):
        projection = algebra.projection(m)
        if algebra.neg(algebra.neg(projection)) != projection:
            verdict.fail('double_negation', [m])
            break
    expected_tilde = sorted(algebra.projection(m) for m in range(lattice.size))
    if algebra.tilde_set() != expected_tilde:
        verdict.fail('tilde', [algebra.witness(k) for k in algebra.tilde_set()])
    for p in range(lattice.size):
        for q in range(lattice.size):
            image = monoid.apply(monoid.generator_of[p], q)
            if algebra.quote(algebra.projection(p), algebra.projection(q)) != algebra.projection(image):
                verdict.fail('quotation', [p, q])
                break
    singletons = sorted(algebra.singleton(f) for f in range(len(monoid)))
    if algebra.span() != singletons:
        verdict.fail('span', {'span_size': len(algebra.span()), 'monoid_size': len(monoid)})
    return verdict

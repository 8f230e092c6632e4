# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.algebra.abstract_algebra
###############################
"""

from functools import reduce
from logging import getLogger

import numpy as np

from omlbox.lattice import OrthoLattice
from omlbox.utils import InputError, DecompositionError


class TildeLattice(OrthoLattice):
    r"""The lattice ``(K̃, ⪯, ∼)`` of a dynamic algebra.

    Lattice index ``i`` stands for the algebra element ``elements[i]``.
    """

    def __init__(self, leq, ortho, elements, names=None):
        super(TildeLattice, self).__init__(leq, ortho, names)
        self.elements = list(elements)
        self._position = {k: i for i, k in enumerate(self.elements)}

    def index_of(self, k):
        """Lattice index of the algebra element ``k``, or None."""
        return self._position.get(k)


class AbstractDynAlgebra(object):
    r"""A finite dynamic algebra ``(K, ⊔, ⊙, ∼, −*)`` with zero, unit and top.

    Subclasses supply the operations and a way to enumerate or sample the
    carrier; everything derived from them lives here. Elements must be
    hashable and totally ordered.

    Note:
        If you want to inherit this class and implement your own algebra class,
        you must implement the following functions.
    """

    def __init__(self):
        self._tilde = None
        self._span = None
        self._span_words = None
        self._tilde_lattice = None
        self._psi = None

    # operations

    def join(self, k, l):
        raise NotImplementedError('Method [join] should be implemented.')

    def mul(self, k, l):
        raise NotImplementedError('Method [mul] should be implemented.')

    def neg(self, k):
        raise NotImplementedError('Method [neg] should be implemented.')

    def star(self, k):
        raise NotImplementedError('Method [star] should be implemented.')

    @property
    def zero(self):
        raise NotImplementedError('Method [zero] should be implemented.')

    @property
    def unit(self):
        raise NotImplementedError('Method [unit] should be implemented.')

    @property
    def top(self):
        raise NotImplementedError('Method [top] should be implemented.')

    # carrier

    def carrier_size(self):
        """Number of carrier elements, an exact integer."""
        raise NotImplementedError('Method [carrier_size] should be implemented.')

    def carrier_log2(self):
        return float(np.log2(self.carrier_size()))

    def element_at(self, i):
        """The ``i``-th carrier element in carrier order."""
        raise NotImplementedError('Method [element_at] should be implemented.')

    def sample(self, rng):
        """Draw one carrier element from a ``numpy`` generator."""
        return self.element_at(int(rng.integers(0, self.carrier_size())))

    def elements(self):
        return [self.element_at(i) for i in range(self.carrier_size())]

    def witness(self, k):
        """JSON friendly form of ``k`` for reports."""
        return k

    def describe(self):
        return {
            'carrier_log2': self.carrier_log2(),
            'tilde_size': len(self.tilde_set()),
            'span_size': len(self.span()),
        }

    # derived constructs

    def join_all(self, items):
        return reduce(self.join, items, self.zero)

    def leq(self, k, l):
        r"""The m-semilattice order: ``k ⊑ l`` iff ``k ⊔ l = l``."""
        return self.join(k, l) == l

    def tilde_set(self):
        r"""``K̃``, the image of ``∼``, deduplicated and sorted."""
        if self._tilde is None:
            self._tilde = sorted({self.neg(k) for k in self.elements()})
        return self._tilde

    def is_tilde(self, k):
        return k in set(self.tilde_set())

    def _require_tilde(self, *items):
        tilde = set(self.tilde_set())
        for k in items:
            if k not in tilde:
                raise InputError('{} is not in the image of neg'.format(self.witness(k)))

    def vee(self, items):
        r"""``⋁W = ∼∼(⊔W)`` for a finite ``W ⊆ K̃``."""
        items = list(items)
        self._require_tilde(*items)
        return self.neg(self.neg(self.join_all(items)))

    def wedge(self, items):
        r"""``⋀W = ∼(⊔{∼w : w ∈ W})`` for a finite ``W ⊆ K̃``."""
        items = list(items)
        self._require_tilde(*items)
        return self.neg(self.join_all([self.neg(w) for w in items]))

    def derived_order(self, k, l):
        r"""``k ⪯ l`` iff ``∼∼(k ⊔ l) = l``, for ``k, l ∈ K̃``."""
        self._require_tilde(k, l)
        return self.neg(self.neg(self.join(k, l))) == l

    def span(self):
        r"""``⟨K̃⟩``: all finite ``⊙``-products of elements of ``K̃``, sorted."""
        if self._span is None:
            tilde = self.tilde_set()
            words = {k: (k, ) for k in tilde}
            frontier = list(tilde)
            while frontier:
                discovered = []
                for s in frontier:
                    for w in tilde:
                        product = self.mul(w, s)
                        if product not in words:
                            words[product] = (w, ) + words[s]
                            discovered.append(product)
                frontier = discovered
            self._span = sorted(words)
            self._span_words = words
            getLogger().debug('span of the neg image has {} elements'.format(len(self._span)))
        return self._span

    def span_word(self, s):
        """A word ``(w1, ..., wn)`` over ``K̃`` whose product is ``s``."""
        self.span()
        return self._span_words[s]

    def quote(self, k, l):
        r"""``⌜k⌝(l) = ∼∼(k ⊙ l)``."""
        return self.neg(self.neg(self.mul(k, l)))

    def equiv(self, k, l):
        r"""``k ≡ l`` iff ``⌜k⌝(w) = ⌜l⌝(w)`` for every ``w ∈ K̃``."""
        return all(self.quote(k, w) == self.quote(l, w) for w in self.tilde_set())

    def decompose(self, k):
        r"""The unique finite ``S ⊆ ⟨K̃⟩`` with ``⊔S = k``.

        It is computed as the set of all ``⟨K̃⟩`` elements below ``k``.

        Raises:
            DecompositionError: the join of that set is not ``k``
        """
        below = [s for s in self.span() if self.leq(s, k)]
        if self.join_all(below) != k:
            raise DecompositionError('element has no decomposition into word elements', self.witness(k))
        return below

    def tilde_lattice(self):
        r"""``K̃`` ordered by ``⪯`` with ``∼`` as complement.

        Raises:
            LatticeFormatError: ``⪯`` is not a lattice order
        """
        if self._tilde_lattice is None:
            tilde = self.tilde_set()
            position = {k: i for i, k in enumerate(tilde)}
            size = len(tilde)
            leq = np.zeros((size, size), dtype=bool)
            for i, k in enumerate(tilde):
                for j, l in enumerate(tilde):
                    leq[i, j] = self.neg(self.neg(self.join(k, l))) == l
            ortho = [position[self.neg(k)] for k in tilde]
            names = [str(self.witness(k)) for k in tilde]
            self._tilde_lattice = TildeLattice(leq, ortho, tilde, names)
        return self._tilde_lattice

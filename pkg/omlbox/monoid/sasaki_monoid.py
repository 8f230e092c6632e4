# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.monoid.sasaki_monoid
###########################
"""

from collections import deque, Counter
from logging import getLogger

import numpy as np
from tqdm import tqdm

from omlbox.lattice import EndoMap, sasaki_projection, check_orthomodular
from omlbox.utils import OrthomodularityError, AuditError, SizeGuardError


class SasakiMonoid(object):
    r"""The monoid of all composites of Sasaki projections of a lattice.

    Elements are indexed; the projection ``π_m`` has index ``m``. A word
    ``(m1, ..., mj)`` stands for ``π_m1 ∘ ... ∘ π_mj``.

    Args:
        lattice (OrthoLattice): the underlying orthomodular lattice
        elements (list of EndoMap): the deduplicated elements
        witness_words (list of tuple): one shortest, then lexicographically least, word per element
        star_of (numpy.ndarray): index of the involution image of every element
        compose_table_limit (int): materialise the composition table up to this many elements
        audit (dict): outcome of the word-reversal audit
    """

    def __init__(self, lattice, elements, witness_words, star_of, compose_table_limit=512, audit=None):
        self.lattice = lattice
        self.elements = list(elements)
        self.witness_words = [tuple(word) for word in witness_words]
        self.star_of = np.array(star_of, dtype=np.int64)
        self.generator_of = np.arange(lattice.size)
        self.audit = audit or {}
        self.index = {f.key: i for i, f in enumerate(self.elements)}
        self.identity = self.index[EndoMap.identity(lattice).key]
        self.top_image = np.array([f.values[lattice.top] for f in self.elements], dtype=np.int64)
        self.compose_table = None
        if len(self.elements) <= compose_table_limit:
            self.compose_table = self._build_compose_table()

    def _build_compose_table(self):
        size = len(self.elements)
        table = np.empty((size, size), dtype=np.int64)
        for i, f in enumerate(self.elements):
            for j, g in enumerate(self.elements):
                table[i, j] = self.index[f.values[g.values].tobytes()]
        table.setflags(write=False)
        return table

    def __len__(self):
        return len(self.elements)

    def compose(self, f, g):
        r"""Index of ``elements[f] ∘ elements[g]``."""
        if self.compose_table is not None:
            return int(self.compose_table[f, g])
        return self.index[self.elements[f].values[self.elements[g].values].tobytes()]

    def star(self, f):
        return int(self.star_of[f])

    def index_of(self, endomap):
        """Monoid index of ``endomap``, or None if it is not an element."""
        return self.index.get(endomap.key)

    def evaluate_word(self, word):
        """Monoid index of the composite of the generators in ``word``."""
        values = np.arange(self.lattice.size)
        for m in reversed(word):
            values = self.elements[m].values[values]
        return self.index.get(values.tobytes())

    def apply(self, f, x):
        return int(self.elements[f].values[x])

    def label(self, f):
        return '∘'.join('π[{}]'.format(self.lattice.name(m)) for m in self.witness_words[f])

    def report(self):
        histogram = Counter(len(word) for word in self.witness_words)
        return {
            'size': len(self.elements),
            'generators': self.lattice.size,
            'identity': self.identity,
            'word_length_histogram': {str(k): histogram[k] for k in sorted(histogram)},
            'audit': dict(self.audit),
            'compose_table': self.compose_table is not None,
        }

    def __repr__(self):
        return 'SasakiMonoid(size={}, lattice_size={})'.format(len(self.elements), self.lattice.size)


def _evaluate(generators, word, size):
    values = np.arange(size)
    for m in reversed(word):
        values = generators[m][values]
    return values


def build_monoid(lattice, cap=100000, compose_table_limit=512, show_progress=False):
    r"""Close the Sasaki projections of ``lattice`` under composition.

    The closure is a breadth-first search that extends words on the right by
    generators in index order, so the first word found for an element is its
    shortest, then lexicographically least, word. Every edge ``g ∘ π_m = f``
    met by the search is recorded. The involution maps an element to the
    composite of its reversed witness word, and every recorded edge is then
    audited: ``star(f)`` must equal ``π_m ∘ star(g)``. Since every word is a
    path of edges, a clean audit means all words of an element reverse to the
    same function.

    Args:
        lattice (OrthoLattice): an orthomodular lattice
        cap (int): largest monoid size accepted
        compose_table_limit (int): see :class:`SasakiMonoid`
        show_progress (bool): display a progress bar

    Returns:
        SasakiMonoid: the closure

    Raises:
        OrthomodularityError: ``lattice`` is not orthomodular
        SizeGuardError: the closure exceeds ``cap``
        AuditError: two words of one element reverse to different functions
    """
    logger = getLogger()
    verdict = check_orthomodular(lattice)
    if not verdict.passed:
        raise OrthomodularityError('the Sasaki monoid needs an orthomodular lattice', verdict.witnesses[0]['witness'])

    n = lattice.size
    generators = [sasaki_projection(lattice, m).values for m in range(n)]
    elements, words, index = [], [], {}
    for m in range(n):
        index[generators[m].tobytes()] = m
        elements.append(generators[m])
        words.append((m, ))
    edges = []
    queue = deque(range(n))
    progress = tqdm(total=None, desc='sasaki monoid', disable=not show_progress)
    while queue:
        g = queue.popleft()
        for m in range(n):
            values = elements[g][generators[m]]
            key = values.tobytes()
            f = index.get(key)
            if f is None:
                f = len(elements)
                if f >= cap:
                    progress.close()
                    raise SizeGuardError('the Sasaki monoid exceeds the cap of {} elements'.format(cap))
                index[key] = f
                elements.append(values)
                words.append(words[g] + (m, ))
                queue.append(f)
                progress.update(1)
            else:
                edges.append((g, m, f))
    progress.close()

    star_of = np.empty(len(elements), dtype=np.int64)
    for f, word in enumerate(words):
        star_of[f] = index[_evaluate(generators, word[::-1], n).tobytes()]

    for g, m, f in edges:
        expected = elements[m][elements[star_of[g]]]
        if expected.tobytes() != elements[star_of[f]].tobytes():
            raise AuditError(
                'word reversal is not well defined', {
                    'words': [list(words[g] + (m, )), list(words[f])],
                    'reversed': [list((words[g] + (m, ))[::-1]), list(words[f][::-1])],
                }
            )
    audit = {'status': 'pass', 'edges_checked': len(edges), 'failures': 0}
    logger.info('Sasaki monoid of a {}-element lattice has {} elements'.format(n, len(elements)))
    return SasakiMonoid(
        lattice, [EndoMap(lattice, values) for values in elements],
        words,
        star_of,
        compose_table_limit=compose_table_limit,
        audit=audit
    )

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.lattice.ortholattice
###########################
"""

import json
from functools import reduce

import numpy as np

from omlbox.utils import LatticeFormatError


class OrthoLattice(object):
    r"""A finite bounded lattice with a unary map ``ortho``.

    Elements are the indices ``0 .. size-1``. The order is a full boolean
    matrix, binary meets and joins are precomputed tables, and every array is
    read-only once the lattice is built.

    Construction validates that ``leq`` is a partial order with a least and a
    greatest element in which every pair has a meet and a join, and that
    ``ortho`` is a permutation. Whether ``ortho`` is an orthocomplementation is
    left to :func:`~omlbox.lattice.checks.check_ortholattice`, so that broken
    complements can still be inspected.

    Args:
        leq (numpy.ndarray): ``size x size`` boolean matrix, ``leq[i, j]`` iff i <= j
        ortho (list of int): the orthocomplement permutation
        names (list of str, optional): display labels
    """

    def __init__(self, leq, ortho, names=None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1] or leq.shape[0] == 0:
            raise LatticeFormatError('order relation must be a non-empty square matrix')
        self.size = leq.shape[0]
        self.leq = leq
        self._check_partial_order()
        self.bottom, self.top = self._find_bounds()
        self.meet_table = self._build_bound_table(lower=True)
        self.join_table = self._build_bound_table(lower=False)

        ortho = np.array(ortho, dtype=np.int64)
        if ortho.shape != (self.size, ) or sorted(ortho.tolist()) != list(range(self.size)):
            raise LatticeFormatError('ortho must be a permutation of the {} element indices'.format(self.size))
        self.ortho = ortho

        if names is None:
            names = [str(i) for i in range(self.size)]
        if len(names) != self.size:
            raise LatticeFormatError('expected {} names, got {}'.format(self.size, len(names)))
        self.names = [str(name) for name in names]
        self._index_of_name = {name: i for i, name in enumerate(self.names)}

        for array in (self.leq, self.meet_table, self.join_table, self.ortho):
            array.setflags(write=False)

    def _check_partial_order(self):
        leq = self.leq
        diagonal = np.flatnonzero(~np.diag(leq))
        if diagonal.size:
            raise LatticeFormatError('order is not reflexive', [int(diagonal[0])])
        both = leq & leq.T & ~np.eye(self.size, dtype=bool)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise LatticeFormatError('order is not antisymmetric', [int(i), int(j)])
        closure = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        missing = closure & ~leq
        if missing.any():
            i, j = np.argwhere(missing)[0]
            raise LatticeFormatError('order is not transitive', [int(i), int(j)])

    def _find_bounds(self):
        bottoms = np.flatnonzero(self.leq.all(axis=1))
        tops = np.flatnonzero(self.leq.all(axis=0))
        if bottoms.size != 1 or tops.size != 1:
            raise LatticeFormatError('order has no least or no greatest element')
        return int(bottoms[0]), int(tops[0])

    def _build_bound_table(self, lower):
        leq = self.leq if lower else self.leq.T
        table = np.empty((self.size, self.size), dtype=np.int64)
        for i in range(self.size):
            for j in range(i, self.size):
                bounds = np.flatnonzero(leq[:, i] & leq[:, j])
                best = [b for b in bounds if leq[bounds, b].all()]
                if len(best) != 1:
                    raise LatticeFormatError('missing {} for a pair'.format('meet' if lower else 'join'), [i, j])
                table[i, j] = table[j, i] = best[0]
        return table

    def meet(self, m, n):
        return int(self.meet_table[m, n])

    def join(self, m, n):
        return int(self.join_table[m, n])

    def perp(self, m):
        return int(self.ortho[m])

    def le(self, m, n):
        return bool(self.leq[m, n])

    def is_orthogonal(self, m, n):
        """``m`` is orthogonal to ``n`` iff m <= n⊥."""
        return bool(self.leq[m, self.ortho[n]])

    def join_all(self, elements):
        """Join of a finite collection; the empty join is the bottom."""
        return reduce(self.join, elements, self.bottom)

    def meet_all(self, elements):
        """Meet of a finite collection; the empty meet is the top."""
        return reduce(self.meet, elements, self.top)

    def name(self, m):
        return self.names[m]

    def index(self, name):
        return self._index_of_name[name]

    def down_set_sizes(self):
        return self.leq.sum(axis=0)

    def up_set_sizes(self):
        return self.leq.sum(axis=1)

    def is_distributive(self):
        meet, join = self.meet_table, self.join_table
        for m in range(self.size):
            left = meet[m][join]
            right = join[meet[m][:, None], meet[m][None, :]]
            if (left != right).any():
                return False
        return True

    def to_dict(self):
        pairs = np.argwhere(self.leq & ~np.eye(self.size, dtype=bool))
        return {
            'n': self.size,
            'leq': [[int(i), int(j)] for i, j in pairs],
            'ortho': [int(o) for o in self.ortho],
            'names': list(self.names),
        }

    def _key(self):
        return self.leq.tobytes(), self.ortho.tobytes()

    def __eq__(self, other):
        return isinstance(other, OrthoLattice) and self._key() == other._key() and self.names == other.names

    def __hash__(self):
        return hash(self._key())

    def __len__(self):
        return self.size

    def __repr__(self):
        return 'OrthoLattice(size={}, names={})'.format(self.size, self.names)


def _is_index(value, n):
    return isinstance(value, int) and not isinstance(value, bool) and 0 <= value < n


def parse_lattice(text):
    r"""Parse and validate the JSON lattice format.

    The object has fields ``n``, ``leq`` (``[i, j]`` pairs meaning i <= j;
    reflexive pairs may be omitted, the transitive closure is taken),
    ``ortho`` and optionally ``names``.

    Args:
        text (str): file content

    Returns:
        OrthoLattice: a lattice that passes :func:`check_ortholattice`

    Raises:
        LatticeFormatError: on syntax errors or when any lattice or ortholattice law fails
    """
    from omlbox.lattice.checks import check_ortholattice

    try:
        data = json.loads(text)
    except ValueError as e:
        raise LatticeFormatError('invalid JSON: {}'.format(e))
    if not isinstance(data, dict) or not {'n', 'leq', 'ortho'} <= set(data):
        raise LatticeFormatError('lattice object needs the fields n, leq and ortho')
    n = data['n']
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise LatticeFormatError('n must be a positive integer')
    if not isinstance(data['leq'], list):
        raise LatticeFormatError('leq must be a list of pairs')
    ortho = data['ortho']
    if not isinstance(ortho, list) or not all(_is_index(i, n) for i in ortho):
        raise LatticeFormatError('ortho must be a list of element indices below {}'.format(n))
    names = data.get('names')
    if names is not None and (not isinstance(names, list) or not all(isinstance(name, str) for name in names)):
        raise LatticeFormatError('names must be a list of strings')

    leq = np.eye(n, dtype=bool)
    for pair in data['leq']:
        if not isinstance(pair, list) or len(pair) != 2 or not all(_is_index(i, n) for i in pair):
            raise LatticeFormatError('bad order pair', pair)
        leq[pair[0], pair[1]] = True
    while True:
        closed = leq | ((leq.astype(np.int64) @ leq.astype(np.int64)) > 0)
        if (closed == leq).all():
            break
        leq = closed

    try:
        lattice = OrthoLattice(leq, ortho, names)
    except LatticeFormatError:
        raise
    except (TypeError, ValueError) as e:
        raise LatticeFormatError('bad lattice: {}'.format(e))
    verdict = check_ortholattice(lattice)
    if not verdict.passed:
        first = verdict.witnesses[0]
        raise LatticeFormatError('ortho violates the {} law'.format(first['clause']), first['witness'])
    return lattice


def serialize_lattice(lattice):
    """Write ``lattice`` in the JSON lattice format understood by :func:`parse_lattice`."""
    return json.dumps(lattice.to_dict(), sort_keys=True)

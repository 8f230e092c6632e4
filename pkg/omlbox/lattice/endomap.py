# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.lattice.endomap
######################
"""

import numpy as np


class EndoMap(object):
    r"""A total map from a lattice to itself, stored as its value vector.

    ``values[x]`` is the image of ``x``. Two maps are equal iff their value
    vectors are, and they hash by the raw bytes of the vector.

    Args:
        lattice (OrthoLattice): the underlying lattice
        values (array-like of int): image of every element
    """

    __slots__ = ('lattice', 'values', '_key')

    def __init__(self, lattice, values):
        values = np.array(values, dtype=np.int64)
        if values.shape != (lattice.size, ):
            raise ValueError('an endomap of a {}-element lattice needs {} values'.format(lattice.size, lattice.size))
        if values.size and (values.min() < 0 or values.max() >= lattice.size):
            raise ValueError('endomap value out of range')
        values.setflags(write=False)
        self.lattice = lattice
        self.values = values
        self._key = values.tobytes()

    @classmethod
    def identity(cls, lattice):
        return cls(lattice, np.arange(lattice.size))

    @classmethod
    def constant(cls, lattice, element):
        return cls(lattice, np.full(lattice.size, element))

    def __call__(self, x):
        return int(self.values[x])

    def compose(self, other):
        """``self ∘ other``, i.e. ``x -> self(other(x))``."""
        return EndoMap(self.lattice, self.values[other.values])

    def is_order_preserving(self):
        leq = self.lattice.leq
        return bool(leq[np.ix_(self.values, self.values)][leq].all())

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, EndoMap) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return 'EndoMap({})'.format(self.values.tolist())

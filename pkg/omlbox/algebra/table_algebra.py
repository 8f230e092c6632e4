# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.algebra.table_algebra
############################
"""

import json

import numpy as np

from omlbox.algebra.abstract_algebra import AbstractDynAlgebra
from omlbox.utils import AlgebraFormatError


class TableDynAlgebra(AbstractDynAlgebra):
    r"""A dynamic algebra given by operation tables over ``0 .. size-1``.

    Args:
        join (array-like): ``size x size`` table of ``⊔``
        mul (array-like): ``size x size`` table of ``⊙``
        neg (array-like): table of ``∼``
        star (array-like): table of ``−*``
        zero (int): the neutral element of ``⊔``
        unit (int): the neutral element of ``⊙``
        top (int): the greatest element
        labels (list of str, optional): display labels
    """

    def __init__(self, join, mul, neg, star, zero, unit, top, labels=None):
        super(TableDynAlgebra, self).__init__()
        self.join_table = np.array(join, dtype=np.int64)
        self.size = self.join_table.shape[0] if self.join_table.ndim == 2 else 0
        self.mul_table = np.array(mul, dtype=np.int64)
        self.neg_table = np.array(neg, dtype=np.int64)
        self.star_table = np.array(star, dtype=np.int64)
        self._zero, self._unit, self._top = zero, unit, top
        self.labels = list(labels) if labels is not None else None
        self._validate()

    def _validate(self):
        n = self.size
        if n == 0:
            raise AlgebraFormatError('the carrier must be non-empty')
        for name, table, shape in (
            ('join', self.join_table, (n, n)), ('mul', self.mul_table, (n, n)), ('neg', self.neg_table, (n, )),
            ('star', self.star_table, (n, ))
        ):
            if table.shape != shape:
                raise AlgebraFormatError('table {} must have shape {}, got {}'.format(name, shape, table.shape))
            if table.min() < 0 or table.max() >= n:
                raise AlgebraFormatError('table {} has an entry outside the carrier'.format(name))
        for name, value in (('zero', self._zero), ('unit', self._unit), ('top', self._top)):
            if not isinstance(value, (int, np.integer)) or not 0 <= value < n:
                raise AlgebraFormatError('{} must be a carrier index'.format(name))
        if self.labels is not None and len(self.labels) != n:
            raise AlgebraFormatError('expected {} labels'.format(n))

    def join(self, k, l):
        return int(self.join_table[k, l])

    def mul(self, k, l):
        return int(self.mul_table[k, l])

    def neg(self, k):
        return int(self.neg_table[k])

    def star(self, k):
        return int(self.star_table[k])

    @property
    def zero(self):
        return int(self._zero)

    @property
    def unit(self):
        return int(self._unit)

    @property
    def top(self):
        return int(self._top)

    def carrier_size(self):
        return self.size

    def element_at(self, i):
        return int(i)

    def witness(self, k):
        return self.labels[k] if self.labels is not None else int(k)

    def to_dict(self):
        result = {
            'size': self.size,
            'join': self.join_table.tolist(),
            'mul': self.mul_table.tolist(),
            'neg': self.neg_table.tolist(),
            'star': self.star_table.tolist(),
            'zero': self.zero,
            'unit': self.unit,
            'top': self.top,
        }
        if self.labels is not None:
            result['labels'] = list(self.labels)
        return result

    def __repr__(self):
        return 'TableDynAlgebra(size={})'.format(self.size)


def parse_dyn_algebra(text):
    r"""Parse the JSON algebra format.

    The object has fields ``size``, ``join``, ``mul`` (tables), ``neg``,
    ``star`` (arrays), ``zero``, ``unit``, ``top`` and optionally ``labels``.

    Raises:
        AlgebraFormatError: malformed input
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise AlgebraFormatError('invalid JSON: {}'.format(e))
    required = {'size', 'join', 'mul', 'neg', 'star', 'zero', 'unit', 'top'}
    if not isinstance(data, dict) or not required <= set(data):
        raise AlgebraFormatError('algebra object needs the fields {}'.format(', '.join(sorted(required))))
    try:
        algebra = TableDynAlgebra(
            data['join'], data['mul'], data['neg'], data['star'], data['zero'], data['unit'], data['top'],
            data.get('labels')
        )
    except (TypeError, ValueError) as e:
        if isinstance(e, AlgebraFormatError):
            raise
        raise AlgebraFormatError('malformed operation table: {}'.format(e))
    if algebra.size != data['size']:
        raise AlgebraFormatError('size {} does not match the tables ({})'.format(data['size'], algebra.size))
    return algebra


def serialize_dyn_algebra(algebra):
    return json.dumps(algebra.to_dict(), sort_keys=True)


def tabulate(algebra):
    r"""Turn an enumerable algebra into a :class:`TableDynAlgebra`.

    Carrier index ``i`` of the result stands for ``algebra.element_at(i)``.

    Args:
        algebra (AbstractDynAlgebra): an algebra whose carrier can be listed

    Returns:
        TableDynAlgebra: the same algebra as tables
    """
    elements = algebra.elements()
    position = {k: i for i, k in enumerate(elements)}
    join = [[position[algebra.join(k, l)] for l in elements] for k in elements]
    mul = [[position[algebra.mul(k, l)] for l in elements] for k in elements]
    neg = [position[algebra.neg(k)] for k in elements]
    star = [position[algebra.star(k)] for k in elements]
    labels = [str(algebra.witness(k)) for k in elements]
    return TableDynAlgebra(
        join, mul, neg, star, position[algebra.zero], position[algebra.unit], position[algebra.top], labels
    )

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.data.catalog
###################

Generators for the built-in lattices and the ``catalog:SPEC`` syntax that
names them: ``boolean:N``, ``mo:N`` (also ``moN``), ``o6`` and
``product(SPEC,SPEC)``.
"""

import re
from dataclasses import dataclass, field

import numpy as np

from omlbox.lattice import OrthoLattice
from omlbox.utils import CatalogSpecError, SizeGuardError

LETTERS = 'abcdefghijklmnopqrstuvwxyz'
BOOLEAN_RANGE = (0, 5)
MO_RANGE = (1, 6)


def _check_range(kind, n, bounds):
    low, high = bounds
    if not isinstance(n, int) or not low <= n <= high:
        raise CatalogSpecError('{} takes {} <= n <= {}, got {}'.format(kind, low, high, n))


def gen_boolean(n):
    r"""The Boolean lattice ``B_n`` of subsets of an ``n``-element set.

    Element ``i`` is the subset with bit mask ``i``; ortho is set complement.
    ``n = 0`` gives the one-element lattice where ``0 = 1``.
    """
    _check_range('boolean', n, BOOLEAN_RANGE)
    size = 2 ** n
    masks = np.arange(size)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    ortho = (size - 1) ^ masks
    names = []
    for mask in range(size):
        if mask == 0:
            names.append('0')
        elif mask == size - 1:
            names.append('1')
        else:
            names.append(''.join(LETTERS[i] for i in range(n) if mask >> i & 1))
    return OrthoLattice(leq, ortho, names)


def gen_mo(n):
    r"""The lattice ``MO_n``: ``0``, ``1`` and ``n`` complementary pairs of atoms.

    Index ``0`` is the bottom, ``2i+1`` and ``2i+2`` are the ``i``-th pair
    (named ``x`` and ``x'``) and ``2n+1`` is the top.
    """
    _check_range('mo', n, MO_RANGE)
    size = 2 * n + 2
    top = size - 1
    leq = np.eye(size, dtype=bool)
    leq[0, :] = True
    leq[:, top] = True
    ortho = [top] + [i + 1 if i % 2 else i - 1 for i in range(1, top)] + [0]
    names = ['0']
    for i in range(n):
        names += [LETTERS[i], LETTERS[i] + "'"]
    names.append('1')
    return OrthoLattice(leq, ortho, names)


def gen_o6():
    r"""The hexagon ``0 < a < b < 1``, ``0 < b' < a' < 1``.

    An ortholattice that is not orthomodular: ``a <= b`` but
    ``a ∨ (a' ∧ b) = a``.
    """
    names = ['0', 'a', 'b', "b'", "a'", '1']
    chains = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]
    leq = np.eye(6, dtype=bool)
    for i, j in chains:
        leq[i, j] = True
    while True:
        closed = leq | ((leq.astype(np.int64) @ leq.astype(np.int64)) > 0)
        if (closed == leq).all():
            break
        leq = closed
    return OrthoLattice(leq, [5, 4, 3, 2, 1, 0], names)


def gen_product(first, second, guard=64):
    r"""The product lattice with componentwise order and ortho.

    Pair ``(i, j)`` has index ``i * |second| + j``.

    Raises:
        SizeGuardError: the product has more than ``guard`` elements
    """
    n1, n2 = first.size, second.size
    if n1 * n2 > guard:
        raise SizeGuardError('product of {} and {} elements exceeds the guard of {}'.format(n1, n2, guard))
    leq = (first.leq[:, None, :, None] & second.leq[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    ortho = [int(first.ortho[i]) * n2 + int(second.ortho[j]) for i in range(n1) for j in range(n2)]
    names = ['({},{})'.format(first.name(i), second.name(j)) for i in range(n1) for j in range(n2)]
    return OrthoLattice(leq, ortho, names)


@dataclass(frozen=True)
class CatalogSpec(object):
    """A parsed ``catalog:SPEC`` string; ``str()`` gives its canonical form."""

    kind: str
    n: int = None
    factors: tuple = field(default_factory=tuple)

    @property
    def degenerate(self):
        return self.kind == 'boolean' and self.n == 0

    def build(self, product_guard=64):
        if self.kind == 'boolean':
            return gen_boolean(self.n)
        if self.kind == 'mo':
            return gen_mo(self.n)
        if self.kind == 'o6':
            return gen_o6()
        first, second = self.factors
        return gen_product(first.build(product_guard), second.build(product_guard), product_guard)

    def __str__(self):
        if self.kind == 'product':
            return 'product({},{})'.format(*self.factors)
        if self.kind == 'o6':
            return 'o6'
        return '{}:{}'.format(self.kind, self.n)


def _split_arguments(body):
    depth = 0
    for i, c in enumerate(body):
        if c == '(':
            depth += 1
        elif c == ')':
            depth -= 1
            if depth < 0:
                break
        elif c == ',' and depth == 0:
            return body[:i], body[i + 1:]
    raise CatalogSpecError('product takes two comma separated lattices: product({})'.format(body))


def parse_catalog_spec(text):
    r"""Parse ``boolean:3``, ``mo:2``, ``mo2``, ``o6`` or ``product(mo:2,boolean:1)``.

    A leading ``catalog:`` is ignored. Ranges are checked here, so a parsed
    spec always builds (products still obey the size guard).

    Raises:
        CatalogSpecError: unknown kind, bad syntax or parameter out of range
    """
    text = text.strip()
    if text.startswith('catalog:'):
        text = text[len('catalog:'):].strip()
    lowered = text.lower()
    if lowered == 'o6':
        return CatalogSpec('o6')
    match = re.fullmatch(r'(boolean|mo)\s*:?\s*(\d+)', lowered)
    if match:
        kind, n = match.group(1), int(match.group(2))
        _check_range(kind, n, BOOLEAN_RANGE if kind == 'boolean' else MO_RANGE)
        return CatalogSpec(kind, n)
    match = re.fullmatch(r'product\s*\((.*)\)', lowered)
    if match:
        first, second = _split_arguments(match.group(1))
        return CatalogSpec('product', factors=(parse_catalog_spec(first), parse_catalog_spec(second)))
    raise CatalogSpecError('unknown catalog lattice: {}'.format(text))

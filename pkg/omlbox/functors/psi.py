# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.functors.psi
###################
"""

from logging import getLogger

from omlbox.lattice import OrthoMorphism, check_orthomodular, check_ortholattice
from omlbox.utils import ConsistencyError, OrthomodularityError


def psi_object(algebra):
    r"""The orthomodular lattice ``(K̃, ⪯, ∼)`` of a dynamic algebra.

    Meets and joins come from the order by brute force and are then compared
    with ``⋀`` and ``⋁`` computed inside the algebra. The result is cached on
    the algebra.

    Args:
        algebra (AbstractDynAlgebra): the algebra

    Returns:
        TildeLattice: the lattice, whose ``elements`` are the members of ``K̃``

    Raises:
        LatticeFormatError: ``⪯`` is not a lattice order
        OrthomodularityError: the lattice is not an orthomodular lattice
        ConsistencyError: the derived ``⋁`` or ``⋀`` disagrees with the order
    """
    if algebra._psi is not None:
        return algebra._psi
    lattice = algebra.tilde_lattice()
    for verdict in (check_ortholattice(lattice), check_orthomodular(lattice)):
        if not verdict.passed:
            first = verdict.witnesses[0]
            raise OrthomodularityError(
                'the image of neg is not an orthomodular lattice ({})'.format(first['clause']),
                [lattice.name(i) for i in first['witness']]
            )
    elements = lattice.elements
    for i, k in enumerate(elements):
        for j, l in enumerate(elements):
            if algebra.vee([k, l]) != elements[lattice.join(i, j)]:
                raise ConsistencyError('derived join disagrees with the order', [lattice.name(i), lattice.name(j)])
            if algebra.wedge([k, l]) != elements[lattice.meet(i, j)]:
                raise ConsistencyError('derived meet disagrees with the order', [lattice.name(i), lattice.name(j)])
    getLogger().debug('psi lattice has {} elements'.format(lattice.size))
    algebra._psi = lattice
    return lattice


def psi_arrow(morphism):
    r"""Restrict a morphism of dynamic algebras to ``K̃``.

    Args:
        morphism (FodaMorphism): the morphism

    Returns:
        OrthoMorphism: the restriction between the two ``psi_object`` lattices

    Raises:
        ConsistencyError: an element of ``K̃`` is sent outside ``K̃`` of the target
    """
    source, target = psi_object(morphism.source), psi_object(morphism.target)
    mapping = []
    for k in source.elements:
        position = target.index_of(morphism(k))
        if position is None:
            raise ConsistencyError('image of a neg element is not a neg element', morphism.source.witness(k))
        mapping.append(position)
    return OrthoMorphism(source, target, mapping)

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.lattice.sasaki
#####################
"""

from omlbox.lattice.endomap import EndoMap


def sasaki_projection(lattice, m):
    r"""The Sasaki projection at ``m``: ``n -> m ∧ (m⊥ ∨ n)``.

    Args:
        lattice (OrthoLattice): the lattice
        m (int): element index

    Returns:
        EndoMap: the projection
    """
    return EndoMap(lattice, lattice.meet_table[m, lattice.join_table[lattice.ortho[m], :]])


def sasaki_hook(lattice, m):
    r"""The Sasaki hook at ``m``: ``n -> m⊥ ∨ (m ∧ n)``.

    Args:
        lattice (OrthoLattice): the lattice
        m (int): element index

    Returns:
        EndoMap: the hook
    """
    return EndoMap(lattice, lattice.join_table[lattice.ortho[m], lattice.meet_table[m, :]])

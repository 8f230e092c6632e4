# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.lattice.checks
#####################

Brute-force checkers for the ortholattice laws and the Sasaki operations.
Each returns a :class:`~omlbox.utils.Verdict`; the first witness of every
violated clause is reported in lexicographic index order.
"""

import itertools

import numpy as np

from omlbox.lattice.sasaki import sasaki_projection, sasaki_hook
from omlbox.utils import Verdict, CheckMode


def _first(mask):
    hits = np.argwhere(mask)
    return [int(i) for i in hits[0]] if len(hits) else None


def check_ortholattice(lattice):
    r"""Complementation, antitonicity and involution of ``ortho``.

    Args:
        lattice (OrthoLattice): a bounded lattice with a permutation ``ortho``

    Returns:
        Verdict: one witness per violated clause
    """
    verdict = Verdict('ortholattice')
    ortho = lattice.ortho
    index = np.arange(lattice.size)

    bad_meet = _first(lattice.meet_table[index, ortho] != lattice.bottom)
    if bad_meet is not None:
        verdict.fail('complement_meet', bad_meet)
    bad_join = _first(lattice.join_table[index, ortho] != lattice.top)
    if bad_join is not None:
        verdict.fail('complement_join', bad_join)

    bad_antitone = _first(lattice.leq & ~lattice.leq[np.ix_(ortho, ortho)].T)
    if bad_antitone is not None:
        verdict.fail('antitone', bad_antitone)

    bad_involution = _first(ortho[ortho] != index)
    if bad_involution is not None:
        verdict.fail('involution', bad_involution)
    return verdict


def check_orthomodular(lattice):
    r"""The orthomodular law: ``m <= n`` implies ``n = m ∨ (m⊥ ∧ n)``.

    Returns:
        Verdict: on failure the first violating pair ``(m, n)``
    """
    verdict = Verdict('orthomodular')
    index = np.arange(lattice.size)
    inner = lattice.meet_table[lattice.ortho, :]
    rebuilt = lattice.join_table[index[:, None], inner]
    bad = _first(lattice.leq & (rebuilt != index[None, :]))
    if bad is not None:
        verdict.fail('orthomodular', bad)
    return verdict


def check_adjunction(lattice):
    r"""``π_m(x) <= y`` iff ``x <= hook_m(y)`` for all ``m, x, y``.

    The law holds exactly on orthomodular lattices; the verdict records
    whether it agrees with :func:`check_orthomodular`.

    Returns:
        Verdict: on failure the first triple ``(m, x, y)``
    """
    verdict = Verdict('adjunction')
    leq = lattice.leq
    for m in range(lattice.size):
        projection = sasaki_projection(lattice, m).values
        hook = sasaki_hook(lattice, m).values
        bad = _first(leq[projection, :] != leq[:, hook])
        if bad is not None:
            verdict.fail('adjunction', [m] + bad)
            break
    verdict.details['agrees_with_orthomodular'] = verdict.passed == check_orthomodular(lattice).passed
    return verdict


def check_join_preservation(lattice, max_subset_size=3, join_exhaustive_size=12):
    r"""Sasaki projections preserve the joins of finite subsets.

    All subsets are tried when the lattice has at most ``join_exhaustive_size``
    elements; otherwise subsets of at most ``max_subset_size`` elements.
    The empty subset is always included and joins to the bottom.

    Returns:
        Verdict: on failure ``[m, subset]``
    """
    verdict = Verdict('join_preservation')
    if lattice.size <= join_exhaustive_size:
        sizes = range(lattice.size + 1)
    else:
        sizes = range(max_subset_size + 1)
        verdict.mode = CheckMode.STRUCTURAL
        verdict.details['max_subset_size'] = max_subset_size
    projections = [sasaki_projection(lattice, m).values for m in range(lattice.size)]
    for size in sizes:
        for subset in itertools.combinations(range(lattice.size), size):
            top = lattice.join_all(subset)
            for m, projection in enumerate(projections):
                if projection[top] != lattice.join_all(projection[list(subset)]):
                    return verdict.fail('join_preservation', [m, list(subset)])
    return verdict


def check_sasaki_laws(lattice):
    r"""Order preservation, idempotency, ``π_m(x) <= m``, ``π_m(1) = m`` and ``hook_m = ⊥∘π_m∘⊥``.

    Returns:
        Verdict: one witness per violated clause
    """
    verdict = Verdict('sasaki_laws')
    ortho = lattice.ortho
    for m in range(lattice.size):
        projection = sasaki_projection(lattice, m)
        values = projection.values
        if not projection.is_order_preserving() and 'order_preserving' not in verdict.failed_clauses():
            verdict.fail('order_preserving', [m])
        if (values[values] != values).any() and 'idempotent' not in verdict.failed_clauses():
            verdict.fail('idempotent', [m, int(np.flatnonzero(values[values] != values)[0])])
        below = lattice.leq[values, m]
        if not below.all() and 'below' not in verdict.failed_clauses():
            verdict.fail('below', [m, int(np.flatnonzero(~below)[0])])
        if values[lattice.top] != m and 'top_image' not in verdict.failed_clauses():
            verdict.fail('top_image', [m])
        hook = sasaki_hook(lattice, m).values
        conjugated = ortho[values[ortho]]
        if (hook != conjugated).any() and 'hook' not in verdict.failed_clauses():
            verdict.fail('hook', [m, int(np.flatnonzero(hook != conjugated)[0])])
    return verdict

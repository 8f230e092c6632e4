# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.lattice.morphism
#######################
"""

from logging import getLogger

import numpy as np

from omlbox.utils import Verdict, SizeGuardError


class OrthoMorphism(object):
    r"""A map between the elements of two ortholattices.

    Args:
        source (OrthoLattice): domain
        target (OrthoLattice): codomain
        mapping (array-like of int): image of every source element
    """

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = np.array(mapping, dtype=np.int64)
        self.mapping.setflags(write=False)

    def __call__(self, m):
        return int(self.mapping[m])

    def inverse(self):
        inverse = np.empty(self.target.size, dtype=np.int64)
        inverse[self.mapping] = np.arange(self.source.size)
        return OrthoMorphism(self.target, self.source, inverse)

    def compose(self, other):
        """``self ∘ other``: apply ``other`` first."""
        return OrthoMorphism(other.source, self.target, self.mapping[other.mapping])

    def is_identity(self):
        return self.source is self.target and (self.mapping == np.arange(self.source.size)).all()

    def to_list(self):
        return [int(v) for v in self.mapping]

    def describe(self):
        """Readable form using element names, e.g. ``{'a': 'b', ...}``."""
        return {self.source.name(m): self.target.name(int(v)) for m, v in enumerate(self.mapping)}

    def __eq__(self, other):
        return (
            isinstance(other, OrthoMorphism) and self.source is other.source and self.target is other.target
            and (self.mapping == other.mapping).all()
        )

    def __hash__(self):
        return hash(self.mapping.tobytes())

    def __repr__(self):
        return 'OrthoMorphism({})'.format(self.to_list())


def identity_ortho(lattice):
    return OrthoMorphism(lattice, lattice, np.arange(lattice.size))


def compose_ortho(second, first):
    """``second ∘ first``."""
    return second.compose(first)


def _first(mask):
    hits = np.argwhere(mask)
    return [int(i) for i in hits[0]] if len(hits) else None


def check_ortho_iso(morphism):
    r"""Check that ``morphism`` is an ortho-lattice isomorphism.

    The clauses are ``bijection``, ``order`` (both directions) and ``ortho``;
    preservation of binary ``join`` and ``meet`` is checked as a corollary.
    A size mismatch is reported as the single clause ``size``.

    Returns:
        Verdict: one witness per violated clause
    """
    verdict = Verdict('ortho_iso')
    source, target, mapping = morphism.source, morphism.target, morphism.mapping
    if mapping.shape != (source.size, ) or source.size != target.size:
        verdict.details['size_mismatch'] = True
        return verdict.fail('size', [source.size, target.size, int(mapping.size)])
    out_of_range = np.flatnonzero((mapping < 0) | (mapping >= target.size))
    if out_of_range.size:
        return verdict.fail('bijection', [int(out_of_range[0])])
    if len(set(mapping.tolist())) != source.size:
        seen = {}
        for m, v in enumerate(mapping.tolist()):
            if v in seen:
                return verdict.fail('bijection', [seen[v], m])
            seen[v] = m

    bad = _first(source.leq != target.leq[np.ix_(mapping, mapping)])
    if bad is not None:
        verdict.fail('order', bad)
    bad = _first(mapping[source.ortho] != target.ortho[mapping])
    if bad is not None:
        verdict.fail('ortho', bad)
    bad = _first(mapping[source.join_table] != target.join_table[np.ix_(mapping, mapping)])
    if bad is not None:
        verdict.fail('join', bad)
    bad = _first(mapping[source.meet_table] != target.meet_table[np.ix_(mapping, mapping)])
    if bad is not None:
        verdict.fail('meet', bad)
    return verdict


def find_isomorphisms(source, target, guard=24):
    r"""All ortho-lattice isomorphisms from ``source`` to ``target``.

    Backtracking assigns an element and its complement together, in index
    order of the source, and only to target elements with the same down-set
    and up-set sizes; every new pair is checked against the order on the
    already assigned elements. The result is sorted lexicographically.

    Args:
        source (OrthoLattice): domain
        target (OrthoLattice): codomain
        guard (int): largest lattice size accepted

    Returns:
        list of OrthoMorphism: the isomorphisms

    Raises:
        SizeGuardError: when a lattice has more than ``guard`` elements
    """
    if max(source.size, target.size) > guard:
        raise SizeGuardError(
            'isomorphism search is limited to lattices of at most {} elements, got {}'.format(
                guard, max(source.size, target.size)
            )
        )
    if source.size != target.size:
        return []
    n = source.size
    signature_s = list(zip(source.down_set_sizes().tolist(), source.up_set_sizes().tolist()))
    signature_t = list(zip(target.down_set_sizes().tolist(), target.up_set_sizes().tolist()))
    candidates = [[v for v in range(n) if signature_t[v] == signature_s[m]] for m in range(n)]
    s_leq, t_leq = source.leq, target.leq
    s_ortho, t_ortho = source.ortho, target.ortho

    mapping = [-1] * n
    used = [False] * n
    assigned = []
    results = []

    def consistent(m, v):
        for u in assigned:
            w = mapping[u]
            if s_leq[m, u] != t_leq[v, w] or s_leq[u, m] != t_leq[w, v]:
                return False
        return True

    def search():
        m = next((i for i in range(n) if mapping[i] < 0), None)
        if m is None:
            results.append(OrthoMorphism(source, target, mapping))
            return
        mp = int(s_ortho[m])
        for v in candidates[m]:
            vp = int(t_ortho[v])
            if used[v] or used[vp] or (mp == m) != (vp == v):
                continue
            if not consistent(m, v):
                continue
            mapping[m], used[v] = v, True
            assigned.append(m)
            if mp != m:
                if not consistent(mp, vp) or s_leq[m, mp] != t_leq[v, vp] or s_leq[mp, m] != t_leq[vp, v]:
                    mapping[m], used[v] = -1, False
                    assigned.pop()
                    continue
                mapping[mp], used[vp] = vp, True
                assigned.append(mp)
            search()
            if mp != m:
                assigned.pop()
                mapping[mp], used[vp] = -1, False
            assigned.pop()
            mapping[m], used[v] = -1, False

    search()
    results.sort(key=lambda f: f.to_list())
    getLogger().debug('found {} isomorphisms between lattices of size {}'.format(len(results), n))
    return results


def enumerate_automorphisms(lattice, guard=24):
    """All ortho-lattice automorphisms of ``lattice``, identity first."""
    return find_isomorphisms(lattice, lattice, guard)

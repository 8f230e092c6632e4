# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.monoid.checks
####################
"""

import numpy as np

from omlbox.utils import Verdict, Budget, TupleSource, merge_verdicts


def check_involutive_monoid(monoid, budget=None):
    r"""Associativity, identity, involution and anti-homomorphism of a monoid.

    Associativity is checked on triples, all of them when ``|S|³`` fits the
    budget; each product is also compared with the pointwise composite of
    the stored functions, so no product escapes the element list.

    Args:
        monoid (SasakiMonoid): the monoid, or anything exposing ``compose``, ``star`` and ``elements``
        budget (Budget): sampling budget

    Returns:
        Verdict: merged verdict of the four laws
    """
    budget = budget or Budget()
    size = len(monoid.elements)
    e = monoid.identity

    closure = Verdict('closure')
    pairs = TupleSource(size, 2, budget, 'monoid.closure')
    for f, g in pairs:
        product = monoid.compose(f, g)
        expected = monoid.elements[f].values[monoid.elements[g].values]
        if not np.array_equal(monoid.elements[product].values, expected):
            closure.fail('closure', [f, g])
            break
    pairs.stamp(closure)

    associativity = Verdict('associativity')
    triples = TupleSource(size, 3, budget, 'monoid.associativity')
    for f, g, h in triples:
        if monoid.compose(monoid.compose(f, g), h) != monoid.compose(f, monoid.compose(g, h)):
            associativity.fail('associativity', [f, g, h])
            break
    triples.stamp(associativity)

    identity = Verdict('identity')
    involution = Verdict('involution')
    for f in range(size):
        if monoid.compose(e, f) != f or monoid.compose(f, e) != f:
            identity.fail('identity', [f])
            break
    for f in range(size):
        if monoid.star(monoid.star(f)) != f:
            involution.fail('involution', [f])
            break
    if monoid.star(e) != e:
        involution.fail('identity_fixed', [e])

    anti = Verdict('anti_homomorphism')
    pairs = TupleSource(size, 2, budget, 'monoid.anti_homomorphism')
    for f, g in pairs:
        if monoid.star(monoid.compose(f, g)) != monoid.compose(monoid.star(g), monoid.star(f)):
            anti.fail('anti_homomorphism', [f, g])
            break
    pairs.stamp(anti)

    return merge_verdicts('involutive_monoid', [closure, associativity, identity, involution, anti])


def check_star_adjointness(monoid):
    r"""``f(x) ⊥ y`` iff ``x ⊥ f*(y)`` for every element ``f`` and all ``x, y``.

    Here ``u ⊥ v`` means ``u <= v⊥``. Every generator must also be fixed by the
    involution.

    Returns:
        Verdict: witness ``[f, x, y]`` or ``[m]``
    """
    verdict = Verdict('star_adjointness')
    lattice = monoid.lattice
    leq, ortho = lattice.leq, lattice.ortho
    for f, endomap in enumerate(monoid.elements):
        star_values = monoid.elements[monoid.star(f)].values
        left = leq[np.ix_(endomap.values, ortho)]
        right = leq[np.ix_(np.arange(lattice.size), ortho[star_values])]
        bad = np.argwhere(left != right)
        if len(bad):
            verdict.fail('orthogonality', [f, int(bad[0][0]), int(bad[0][1])])
            break
    for m in range(lattice.size):
        if monoid.star(m) != m:
            verdict.fail('generator_fixed', [m])
            break
    return verdict


def check_witness_words(monoid):
    r"""Every witness word evaluates to the element it belongs to.

    Returns:
        Verdict: witness ``[f, word]``
    """
    verdict = Verdict('witness_words')
    for f, word in enumerate(monoid.witness_words):
        if monoid.evaluate_word(word) != f:
            verdict.fail('witness_word', [f, list(word)])
            break
    return verdict

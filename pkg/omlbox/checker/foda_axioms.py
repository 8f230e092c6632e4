# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.checker.foda_axioms
##########################

One function per axiom of a finitary orthomodular dynamic algebra. Each
takes an algebra and a :class:`~omlbox.utils.Budget` and returns a
:class:`~omlbox.utils.Verdict` whose witnesses replay through the public
algebra operations.
"""

import itertools
from functools import reduce

from omlbox.algebra import carrier_tuples
from omlbox.lattice import check_ortholattice, check_orthomodular
from omlbox.utils import Verdict, Budget, CheckMode, LatticeFormatError, make_rng


class _Clauses(object):
    """Evaluates named laws, keeping the first witness of each."""

    def __init__(self, verdict, algebra):
        self.verdict = verdict
        self.algebra = algebra
        self.failed = set()

    def __call__(self, clause, holds, *elements):
        if clause in self.failed:
            return
        if not holds():
            self.failed.add(clause)
            self.verdict.fail(clause, [self.algebra.witness(k) for k in elements])


def check_foda1(algebra, budget):
    r"""Unital involutive m-semilattice laws.

    Bounded join-semilattice, associative multiplication distributing over
    binary joins and zero on both sides, unit laws, and an involution that is
    an anti-homomorphism of ``⊙`` and linear in ``⊔``.
    """
    K = algebra
    verdict = Verdict('FODA1')
    law = _Clauses(verdict, K)
    zero, unit, top = K.zero, K.unit, K.top
    law('star_zero', lambda: K.star(zero) == zero, zero)

    singles = carrier_tuples(K, 1, budget, 'foda1.unary')
    for k, in singles:
        law('join_idempotent', lambda: K.join(k, k) == k, k)
        law('zero_neutral', lambda: K.join(k, zero) == k, k)
        law('top_greatest', lambda: K.join(k, top) == top, k)
        law('unit', lambda: K.mul(unit, k) == k and K.mul(k, unit) == k, k)
        law('mul_zero', lambda: K.mul(k, zero) == zero and K.mul(zero, k) == zero, k)
        law('star_involution', lambda: K.star(K.star(k)) == k, k)

    pairs = carrier_tuples(K, 2, budget, 'foda1.binary')
    for k, l in pairs:
        law('join_commutative', lambda: K.join(k, l) == K.join(l, k), k, l)
        law('star_anti_homomorphism', lambda: K.star(K.mul(k, l)) == K.mul(K.star(l), K.star(k)), k, l)
        law('star_join', lambda: K.star(K.join(k, l)) == K.join(K.star(k), K.star(l)), k, l)

    triples = carrier_tuples(K, 3, budget, 'foda1.ternary')
    for k, l, m in triples:
        law('join_associative', lambda: K.join(K.join(k, l), m) == K.join(k, K.join(l, m)), k, l, m)
        law('mul_associative', lambda: K.mul(K.mul(k, l), m) == K.mul(k, K.mul(l, m)), k, l, m)
        law('left_distributive', lambda: K.mul(k, K.join(l, m)) == K.join(K.mul(k, l), K.mul(k, m)), k, l, m)
        law('right_distributive', lambda: K.mul(K.join(l, m), k) == K.join(K.mul(l, k), K.mul(m, k)), k, l, m)

    triples.stamp(verdict)
    verdict.details['coverage'] = {
        'unary': singles.mode.value,
        'binary': pairs.mode.value,
        'ternary': triples.mode.value,
    }
    return verdict


def check_foda2(algebra, budget=None):
    r"""``(K̃, ⪯, ∼)`` is an orthomodular lattice and ``K̃`` is closed under ``−*``."""
    verdict = Verdict('FODA2')
    try:
        lattice = algebra.tilde_lattice()
    except LatticeFormatError as e:
        return verdict.fail('tilde_lattice', {'error': str(e), 'detail': e.witness})
    for part in (check_ortholattice(lattice), check_orthomodular(lattice)):
        for witness in part.witnesses:
            verdict.fail('{}.{}'.format(part.name, witness['clause']), [lattice.name(i) for i in witness['witness']])
    tilde = set(algebra.tilde_set())
    for k in algebra.tilde_set():
        if algebra.star(k) not in tilde:
            verdict.fail('star_closed', [algebra.witness(k)])
            break
    verdict.details['tilde_size'] = lattice.size
    return verdict


def closure(algebra, seeds, binary_ops, unary_ops, limit=None):
    r"""Smallest set containing ``seeds`` closed under the given operations.

    Args:
        algebra (AbstractDynAlgebra): the algebra
        seeds (list): start elements
        binary_ops (list of callable): binary operations, applied both ways round
        unary_ops (list of callable): unary operations
        limit (int): stop once the set grows beyond this size

    Returns:
        list: the closure in discovery order
    """
    order = []
    seen = set()
    for k in seeds:
        if k not in seen:
            seen.add(k)
            order.append(k)
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        found = [op(x) for op in unary_ops]
        for y in order[:i]:
            for op in binary_ops:
                found.append(op(x, y))
                found.append(op(y, x))
        for z in found:
            if z not in seen:
                seen.add(z)
                order.append(z)
        if limit is not None and len(order) > limit:
            break
    return order


def check_foda3(algebra, budget):
    r"""The carrier is generated by ``K̃`` under ``⊙``, ``−*``, ``⊔`` and ``0``.

    Small carriers are closed explicitly and compared element by element.
    Otherwise the closure ``C`` of ``K̃ ∪ {0}`` under ``⊙`` and ``−*`` is built
    and every sampled carrier element must be the join of the elements of
    ``C`` below it; given the FODA1 laws, joins of ``C`` are closed under all
    operations, so this is the same requirement.
    """
    K = algebra
    verdict = Verdict('FODA3')
    seeds = list(K.tilde_set()) + [K.zero]
    size = K.carrier_size()
    if size ** 2 <= budget.exhaustive_threshold:
        generated = set(closure(K, seeds, [K.mul, K.join], [K.star], limit=size))
        for k in K.elements():
            if k not in generated:
                verdict.fail('minimality', [K.witness(k)])
                break
        verdict.details['closure_size'] = len(generated)
        return verdict

    generators = closure(K, seeds, [K.mul], [K.star], limit=budget.exhaustive_threshold)
    verdict.mode = CheckMode.STRUCTURAL
    verdict.samples, verdict.seed = budget.samples, budget.seed
    verdict.details['closure_size'] = len(generators)
    rng = make_rng(budget.seed, 'foda3')
    for _ in range(budget.samples):
        k = K.sample(rng)
        if K.join_all([c for c in generators if K.leq(c, k)]) != k:
            verdict.fail('minimality', [K.witness(k)])
            break
    return verdict


def _subset_join(algebra, span, mask):
    return algebra.join_all([span[i] for i in range(len(span)) if mask >> i & 1])


def _subset_witness(algebra, span, mask):
    return [algebra.witness(span[i]) for i in range(len(span)) if mask >> i & 1]


def check_foda4(algebra, budget):
    r"""Distinct finite subsets of ``⟨K̃⟩`` have distinct joins.

    All subsets are joined when ``2^|⟨K̃⟩|`` fits the budget. Otherwise pairs
    ``(S, T)`` are drawn with ``T`` differing from ``S`` in one to three
    members, where a collision would show first.
    """
    K = algebra
    verdict = Verdict('FODA4')
    span = K.span()
    p = len(span)
    if 2 ** p <= budget.exhaustive_threshold:
        joins = [K.zero] * (2 ** p)
        first_mask = {K.zero: 0}
        for mask in range(1, 2 ** p):
            low = mask & -mask
            joins[mask] = K.join(joins[mask ^ low], span[low.bit_length() - 1])
            earlier = first_mask.setdefault(joins[mask], mask)
            if earlier != mask:
                return verdict.fail(
                    'injective', [_subset_witness(K, span, earlier),
                                  _subset_witness(K, span, mask)]
                )
        return verdict

    verdict.mode = CheckMode.SAMPLED
    verdict.samples, verdict.seed = budget.samples, budget.seed
    rng = make_rng(budget.seed, 'foda4')
    for _ in range(budget.samples):
        if rng.random() < 0.9:
            count = min(int(rng.geometric(0.3)) - 1, p)
            members = rng.choice(p, size=count, replace=False)
            mask = sum(1 << int(i) for i in members)
        else:
            mask = int(sum(1 << i for i in range(p) if rng.random() < 0.5))
        flips = rng.choice(p, size=min(int(rng.integers(1, 4)), p), replace=False)
        other = mask ^ sum(1 << int(i) for i in flips)
        if _subset_join(K, span, mask) == _subset_join(K, span, other):
            return verdict.fail('injective', [_subset_witness(K, span, mask), _subset_witness(K, span, other)])
    return verdict


def check_foda5(algebra, budget=None):
    r"""On ``⟨K̃⟩``, ``s = t`` iff ``s ≡ t``."""
    K = algebra
    verdict = Verdict('FODA5')
    tilde = K.tilde_set()
    signatures = {}
    for s in K.span():
        signature = tuple(K.quote(s, w) for w in tilde)
        other = signatures.setdefault(signature, s)
        if other != s:
            return verdict.fail('completeness', [K.witness(other), K.witness(s)])
    return verdict


def check_foda6(algebra, budget=None):
    r"""For ``v, w ∈ K̃``, ``⌜v⌝(w) = v ∧ (∼v ∨ w)`` in ``(K̃, ⪯, ∼)``."""
    K = algebra
    verdict = Verdict('FODA6')
    try:
        lattice = K.tilde_lattice()
    except LatticeFormatError as e:
        return verdict.fail('tilde_lattice', {'error': str(e), 'detail': e.witness})
    for i, v in enumerate(lattice.elements):
        for j, w in enumerate(lattice.elements):
            expected = lattice.elements[lattice.meet(i, lattice.join(lattice.perp(i), j))]
            if K.quote(v, w) != expected:
                return verdict.fail('sasaki', [K.witness(v), K.witness(w)])
    return verdict


def check_foda7(algebra, budget):
    r"""``⌜k⌝(l) = ⌜k⌝(∼∼l)`` for all ``k, l``."""
    K = algebra
    verdict = Verdict('FODA7')
    pairs = carrier_tuples(K, 2, budget, 'foda7')
    for k, l in pairs:
        if K.quote(k, l) != K.quote(k, K.neg(K.neg(l))):
            verdict.fail('composition', [K.witness(k), K.witness(l)])
            break
    return pairs.stamp(verdict)


def _random_word(tilde, max_word_len, rng):
    length = int(rng.integers(1, max_word_len + 1))
    return tuple(tilde[int(i)] for i in rng.integers(0, len(tilde), size=length))


def check_quote_homomorphism(algebra, max_word_len=4, budget=None, quote_samples=8):
    r"""Quotation turns ``⊙``-products of ``K̃`` words into composition.

    For every word ``w1 .. wn`` over ``K̃`` with ``n <= max_word_len`` and every
    test element ``k``: ``⌜w1 ⊙ .. ⊙ wn⌝(k) = ⌜w1⌝(..⌜wn⌝(k)..)``. On ``k ∈ K̃``
    both sides must also equal ``π_w1 ∘ .. ∘ π_wn (k)`` in ``(K̃, ⪯, ∼)``.
    The test elements are the whole carrier when every (word, element) pair
    fits the exhaustive threshold, and ``K̃`` plus ``quote_samples`` seeded
    carrier elements otherwise; the verdict is sampled in that case.
    """
    K = algebra
    budget = budget or Budget()
    verdict = Verdict('quote_homomorphism')
    tilde = K.tilde_set()
    try:
        lattice = K.tilde_lattice()
    except LatticeFormatError:
        lattice = None
        verdict.details['sasaki_part'] = 'skipped'

    total = sum(len(tilde) ** n for n in range(1, max_word_len + 1))
    if total <= budget.exhaustive_threshold:
        words = itertools.chain.from_iterable(
            itertools.product(tilde, repeat=n) for n in range(1, max_word_len + 1)
        )
    else:
        verdict.mode = CheckMode.SAMPLED
        verdict.samples, verdict.seed = budget.samples, budget.seed
        word_rng = make_rng(budget.seed, 'quote.words')
        words = (_random_word(tilde, max_word_len, word_rng) for _ in range(budget.samples))
    n_words = total if verdict.mode == CheckMode.EXHAUSTIVE else budget.samples
    point_budget = Budget(
        exhaustive_threshold=budget.exhaustive_threshold // max(n_words, 1), samples=quote_samples, seed=budget.seed
    )
    source = carrier_tuples(K, 1, point_budget, 'quote.points')
    if source.exhaustive:
        points = [k for k, in source]
    else:
        points = list(tilde) + [k for k, in source]
        verdict.mode = CheckMode.SAMPLED
        if verdict.samples is None:
            verdict.samples, verdict.seed = quote_samples, budget.seed
    verdict.details['max_word_len'] = max_word_len
    verdict.details['points'] = len(points)
    for word in words:
        product = reduce(K.mul, word)
        for k in points:
            nested = k
            for w in reversed(word):
                nested = K.quote(w, nested)
            if K.quote(product, k) != nested:
                return verdict.fail('homomorphism', {
                    'word': [K.witness(w) for w in word],
                    'element': K.witness(k)
                })
        if lattice is None:
            continue
        for k in tilde:
            x = lattice.index_of(k)
            for w in reversed(word):
                p = lattice.index_of(w)
                x = lattice.meet(p, lattice.join(lattice.perp(p), x))
            if lattice.elements[x] != K.quote(product, k):
                return verdict.fail('sasaki_composite', {
                    'word': [K.witness(w) for w in word],
                    'element': K.witness(k)
                })
    return verdict

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.utils.sampling
#####################
"""

import itertools
from dataclasses import dataclass

from omlbox.utils.enum_type import CheckMode
from omlbox.utils.utils import make_rng


@dataclass(frozen=True)
class Budget(object):
    """How much work a check may do before it switches to seeded sampling."""

    exhaustive_threshold: int = 2 ** 20
    samples: int = 10000
    seed: int = 0

    @classmethod
    def from_config(cls, config):
        return cls(
            exhaustive_threshold=int(config['exhaustive_threshold']),
            samples=int(config['samples']),
            seed=int(config['seed'])
        )

    @classmethod
    def for_morphisms(cls, config):
        """The smaller budget used once per morphism of an automorphism group."""
        return cls(
            exhaustive_threshold=int(config['morphism_exhaustive_threshold']),
            samples=int(config['morphism_samples']),
            seed=int(config['seed'])
        )


class TupleSource(object):
    r"""Tuples of a population, all of them or a seeded sample.

    The population is given by its size ``count`` and ``getter(i)``. When
    ``count ** arity`` fits the budget every tuple is produced in lexicographic
    index order; otherwise ``budget.samples`` tuples are drawn, each component
    from ``sampler(rng)`` when given and uniformly from ``range(count)``
    otherwise.

    Args:
        count (int): population size
        arity (int): tuple length
        budget (Budget): the budget
        stream (str): name of the sampling stream
        getter (callable): maps an index to an element, identity by default
        sampler (callable): draws one element from a ``numpy`` generator
    """

    def __init__(self, count, arity, budget, stream, getter=None, sampler=None):
        self.count = count
        self.arity = arity
        self.budget = budget
        self.stream = stream
        self.getter = getter if getter is not None else int
        self.sampler = sampler
        self.exhaustive = count ** arity <= budget.exhaustive_threshold

    @property
    def mode(self):
        return CheckMode.EXHAUSTIVE if self.exhaustive else CheckMode.SAMPLED

    def __len__(self):
        return self.count ** self.arity if self.exhaustive else self.budget.samples

    def __iter__(self):
        if self.exhaustive:
            for indices in itertools.product(range(self.count), repeat=self.arity):
                yield tuple(self.getter(i) for i in indices)
            return
        rng = make_rng(self.budget.seed, self.stream)
        for _ in range(self.budget.samples):
            if self.sampler is not None:
                yield tuple(self.sampler(rng) for _ in range(self.arity))
            else:
                yield tuple(self.getter(int(i)) for i in rng.integers(0, self.count, size=self.arity))

    def stamp(self, verdict):
        """Copy the coverage of this source onto ``verdict``."""
        verdict.mode = self.mode
        if not self.exhaustive:
            verdict.samples = self.budget.samples
            verdict.seed = self.budget.seed
        return verdict

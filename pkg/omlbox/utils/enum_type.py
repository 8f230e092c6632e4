# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.utils.enum_type
#######################
"""

from enum import Enum


class Status(Enum):
    """Outcome of a single check.

    - ``PASS``: every tuple of an exhaustive enumeration satisfied the law
    - ``SAMPLED_PASS``: every drawn sample satisfied the law
    - ``FAIL``: at least one witness was found
    - ``SKIPPED``: the check was not run because an earlier stage failed
    """

    PASS = 'pass'
    SAMPLED_PASS = 'sampled-pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


class CheckMode(Enum):
    """How a check covered its domain.

    - ``EXHAUSTIVE``: all tuples enumerated
    - ``SAMPLED``: seeded samples
    - ``STRUCTURAL``: reduced to a finite sub-problem that implies the law
    """

    EXHAUSTIVE = 'exhaustive'
    SAMPLED = 'sampled'
    STRUCTURAL = 'structural'

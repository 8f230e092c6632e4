# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.checker.abstract_checker
###############################
"""

from omlbox.utils import Budget, InputError


class AbstractChecker(object):
    """:class:`AbstractChecker` is an abstract object which runs a family of checks
    on one structure and collects their verdicts in a report.

    Note:
        If you want to inherit this class and implement your own checker class,
        you must implement the following functions.

    Args:
        config (Config): The config of checker.

    """

    def __init__(self, config):
        self.config = config
        self.budget = Budget.from_config(config)
        self._check_args()

    def _check_args(self):
        """check the correct of the setting"""
        if self.budget.samples <= 0:
            raise InputError('samples must be positive, got {}'.format(self.budget.samples))
        if self.budget.exhaustive_threshold < 0:
            raise InputError('exhaustive_threshold must not be negative')

    def check(self, target):
        """run every check on ``target`` and return a :class:`CheckReport`"""
        raise NotImplementedError('Method [check] should be implemented.')

    def __str__(self):
        return '{}(samples={}, exhaustive_threshold={}, seed={})'.format(
            self.__class__.__name__, self.budget.samples, self.budget.exhaustive_threshold, self.budget.seed
        )

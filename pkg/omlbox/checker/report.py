# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.checker.report
#####################
"""

from collections import OrderedDict

from omlbox.utils import Status


class CheckReport(object):
    r"""An ordered collection of named verdicts.

    Args:
        name (str): report name
    """

    def __init__(self, name):
        self.name = name
        self.verdicts = OrderedDict()
        self.details = dict()

    def add(self, verdict):
        self.verdicts[verdict.name] = verdict
        return verdict

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts.values())

    @property
    def status(self):
        if not self.passed:
            return Status.FAIL
        if all(v.status == Status.PASS for v in self.verdicts.values()):
            return Status.PASS
        return Status.SAMPLED_PASS

    def __getitem__(self, name):
        return self.verdicts[name]

    def __contains__(self, name):
        return name in self.verdicts

    def __iter__(self):
        return iter(self.verdicts.values())

    def to_dict(self):
        result = {name: verdict.to_dict() for name, verdict in self.verdicts.items()}
        result['overall'] = self.status.value
        if self.details:
            result['details'] = dict(self.details)
        return result


class FodaReport(CheckReport):
    """Verdicts of the seven axioms, keyed ``FODA1`` .. ``FODA7``."""

    AXIOMS = ['FODA1', 'FODA2', 'FODA3', 'FODA4', 'FODA5', 'FODA6', 'FODA7']

    def __init__(self):
        super(FodaReport, self).__init__('foda')

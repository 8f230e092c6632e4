# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.utils.verdict
#####################
"""

from dataclasses import dataclass, field

from omlbox.utils.enum_type import Status, CheckMode

MAX_WITNESSES = 8


@dataclass
class Verdict(object):
    """Result of one check.

    A failing verdict always carries at least one witness, a dict naming the
    violated clause and the offending elements in a JSON friendly form.
    """

    name: str
    passed: bool = True
    witnesses: list = field(default_factory=list)
    mode: CheckMode = CheckMode.EXHAUSTIVE
    samples: int = None
    seed: int = None
    details: dict = field(default_factory=dict)

    def fail(self, clause, witness):
        """Record a witness for ``clause`` and mark the verdict failed."""
        self.passed = False
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append({'clause': clause, 'witness': witness})
        return self

    def failed_clauses(self):
        return {w['clause'] for w in self.witnesses}

    @property
    def status(self):
        if not self.passed:
            return Status.FAIL
        if self.mode == CheckMode.EXHAUSTIVE:
            return Status.PASS
        return Status.SAMPLED_PASS

    def __bool__(self):
        return self.passed

    def to_dict(self):
        result = {'status': self.status.value, 'mode': self.mode.value, 'witnesses': list(self.witnesses)}
        if self.samples is not None:
            result['samples'] = self.samples
        if self.seed is not None:
            result['seed'] = self.seed
        if self.details:
            result['details'] = dict(self.details)
        return result


def merge_verdicts(name, verdicts):
    r"""Combine several verdicts into one.

    Witnesses keep the name of the sub-check they came from. The merged mode is
    the weakest one involved: sampled beats structural beats exhaustive.

    Args:
        name (str): name of the merged verdict
        verdicts (list of Verdict): the parts

    Returns:
        Verdict: passed iff every part passed
    """
    merged = Verdict(name)
    samples = [v.samples for v in verdicts if v.samples is not None]
    for verdict in verdicts:
        for witness in verdict.witnesses:
            merged.fail('{}.{}'.format(verdict.name, witness['clause']), witness['witness'])
        if not verdict.passed:
            merged.passed = False
        if verdict.mode == CheckMode.SAMPLED:
            merged.mode = CheckMode.SAMPLED
        elif verdict.mode == CheckMode.STRUCTURAL and merged.mode == CheckMode.EXHAUSTIVE:
            merged.mode = CheckMode.STRUCTURAL
        if verdict.seed is not None:
            merged.seed = verdict.seed
    if samples:
        merged.samples = max(samples)
    merged.details = {v.name: v.status.value for v in verdicts}
    return merged

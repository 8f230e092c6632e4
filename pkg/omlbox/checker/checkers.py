# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.checker.checkers
#######################
"""

from logging import getLogger

from omlbox.checker.abstract_checker import AbstractChecker
from omlbox.checker.report import CheckReport, FodaReport
from omlbox.checker.foda_axioms import check_foda1, check_foda2, check_foda3, check_foda4, check_foda5, \
    check_foda6, check_foda7, check_quote_homomorphism
from omlbox.lattice import check_ortholattice, check_orthomodular, check_adjunction, check_join_preservation, \
    check_sasaki_laws
from omlbox.monoid import check_involutive_monoid, check_star_adjointness, check_witness_words
from omlbox.utils import Verdict, Budget, InputError


AXIOM_CHECKS = [check_foda1, check_foda2, check_foda3, check_foda4, check_foda5, check_foda6, check_foda7]


def check_foda(algebra, budget=None):
    r"""Run the seven axiom checks on ``algebra``.

    Args:
        algebra (AbstractDynAlgebra): the algebra
        budget (Budget): sampling budget

    Returns:
        FodaReport: one verdict per axiom, each with its coverage mode
    """
    logger = getLogger()
    budget = budget or Budget()
    report = FodaReport()
    report.details.update(algebra.describe())
    for axiom_check in AXIOM_CHECKS:
        verdict = report.add(axiom_check(algebra, budget))
        logger.info('{}: {}'.format(verdict.name, verdict.status.value))
    return report


class LatticeChecker(AbstractChecker):
    r"""Ortholattice, orthomodularity, adjunction, join preservation and Sasaki laws of a lattice.

    The ``adjunction_agreement`` verdict passes when the adjunction check and
    the orthomodularity check agree, whichever way they went.
    """

    def check(self, lattice):
        logger = getLogger()
        report = CheckReport('lattice')
        report.details['size'] = lattice.size
        report.add(check_ortholattice(lattice))
        orthomodular = report.add(check_orthomodular(lattice))
        adjunction = report.add(check_adjunction(lattice))
        agreement = report.add(Verdict('adjunction_agreement'))
        if adjunction.passed != orthomodular.passed:
            agreement.fail('agreement', {'adjunction': adjunction.passed, 'orthomodular': orthomodular.passed})
        report.add(
            check_join_preservation(
                lattice, int(self.config['max_subset_size']), int(self.config['join_exhaustive_size'])
            )
        )
        report.add(check_sasaki_laws(lattice))
        logger.info('lattice checks on {} elements: {}'.format(lattice.size, report.status.value))
        return report


class MonoidChecker(AbstractChecker):
    """Audit, involutive monoid laws, star adjointness and witness soundness of a Sasaki monoid."""

    def check(self, monoid):
        report = CheckReport('monoid')
        report.details.update(monoid.report())
        audit = report.add(Verdict('audit', details=dict(monoid.audit)))
        if monoid.audit.get('status') != 'pass':
            audit.fail('audit', monoid.audit)
        report.add(check_involutive_monoid(monoid, self.budget))
        report.add(check_star_adjointness(monoid))
        report.add(check_witness_words(monoid))
        return report


class FodaChecker(AbstractChecker):
    r"""The seven axioms of a finitary orthomodular dynamic algebra.

    ``check`` returns a :class:`FodaReport`; ``check_quotation`` adds the
    quotation homomorphism law.
    """

    def _check_args(self):
        super(FodaChecker, self)._check_args()
        if int(self.config['max_word_len']) < 1:
            raise InputError('max_word_len must be at least 1')

    def check(self, algebra):
        return check_foda(algebra, self.budget)

    def check_quotation(self, algebra):
        return check_quote_homomorphism(
            algebra, int(self.config['max_word_len']), self.budget, int(self.config['quote_samples'])
        )

# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.equivalence.roundtrip
############################
"""

from logging import getLogger

from tqdm import tqdm

from omlbox.algebra import check_foda_morphism
from omlbox.checker import CheckReport, LatticeChecker, MonoidChecker, check_foda
from omlbox.equivalence.naturality import mu_component, check_mu_naturality, lambda_component, \
    check_lambda_bijective, check_lambda_normal_forms, check_lambda_word_definition, check_lambda_neg, \
    check_lambda_naturality
from omlbox.functors import GammaAlgebra, gamma_arrow, psi_object, check_gamma_structure, check_gamma_minimality, \
    check_gamma_foda_morphism, check_gamma_equivariance, check_both_functor_laws
from omlbox.lattice import check_ortholattice, check_orthomodular, check_ortho_iso, enumerate_automorphisms, \
    identity_ortho
from omlbox.monoid import build_monoid
from omlbox.utils import Verdict, Budget, Status, SizeGuardError, VerificationError, merge_verdicts


class RoundtripReport(CheckReport):
    r"""One verdict per stage of the equivalence pipeline.

    Stages that never ran because an earlier one failed are reported as
    ``skipped``; the overall status is ``pass`` only when every stage ran and
    passed exhaustively.

    Args:
        lattice_id (str): stable name of the input lattice
        seed (int): the sampling seed
        samples (int): samples per sampled check
    """

    STAGES = ['lattice', 'monoid', 'gamma', 'foda', 'psi', 'mu', 'lambda', 'functor_laws', 'naturality']

    def __init__(self, lattice_id, seed=0, samples=None):
        super(RoundtripReport, self).__init__('roundtrip')
        self.lattice_id = lattice_id
        self.seed = seed
        self.samples = samples
        self.monoid_size = None
        self.carrier_log2 = None
        self.foda = None

    @property
    def completed(self):
        return all(stage in self.verdicts for stage in self.STAGES)

    @property
    def status(self):
        if not self.passed or not self.completed:
            return Status.FAIL
        return super(RoundtripReport, self).status

    def failed_stage(self):
        for stage in self.STAGES:
            if stage in self.verdicts and not self.verdicts[stage].passed:
                return stage
        return None

    def to_dict(self):
        stages = {}
        for stage in self.STAGES:
            if stage in self.verdicts:
                stages[stage] = self.verdicts[stage].to_dict()
            else:
                stages[stage] = {'status': Status.SKIPPED.value}
        return {
            'lattice': self.lattice_id,
            'seed': self.seed,
            'samples': self.samples,
            'monoid_size': self.monoid_size,
            'carrier_log2': self.carrier_log2,
            'stages': stages,
            'foda_report': self.foda.to_dict() if self.foda is not None else None,
            'details': dict(self.details),
            'overall': self.status.value,
        }


def _fold(name, verdicts, **details):
    merged = merge_verdicts(name, verdicts)
    merged.details = dict(details)
    return merged


def _renamed(verdict, name):
    verdict.name = name
    return verdict


class RoundtripRunner(object):
    r"""Runs the stages of :func:`roundtrip` in order, sharing what each one builds.

    A verification error raised inside a stage becomes that stage's failing
    verdict; input errors propagate.

    Args:
        lattice (OrthoLattice): the lattice
        config (Config): the configuration
        lattice_id (str): stable name for the report
    """

    def __init__(self, lattice, config, lattice_id):
        self.lattice = lattice
        self.config = config
        self.logger = getLogger()
        self.budget = Budget.from_config(config)
        self.morphism_budget = Budget.for_morphisms(config)
        self.show_progress = bool(config['show_progress'])
        self.report = RoundtripReport(lattice_id, self.budget.seed, self.budget.samples)
        self.monoid = None
        self.algebra = None
        self.psi = None
        self.mu = None
        self.lam = None
        self.automorphisms = None

    def run(self):
        for stage in RoundtripReport.STAGES:
            self.logger.info('roundtrip stage [{}]'.format(stage))
            runner = getattr(self, '_stage_' + stage)
            try:
                verdict = runner()
            except VerificationError as e:
                self.logger.error('stage [{}] aborted: {}'.format(stage, e))
                verdict = Verdict(stage).fail('error', {
                    'error': e.__class__.__name__,
                    'message': str(e),
                    'witness': e.witness
                })
            except Exception:
                self.logger.error('stage [{}] raised'.format(stage))
                raise
            self.report.add(verdict)
            self.logger.info('stage [{}]: {}'.format(stage, verdict.status.value))
            if not verdict.passed:
                self.logger.warning('roundtrip stops at stage [{}]; later stages are skipped'.format(stage))
                break
        return self.report

    def _progress(self, items, desc):
        return tqdm(items, desc=desc, disable=not self.show_progress)

    def _stage_lattice(self):
        report = LatticeChecker(self.config).check(self.lattice)
        return _fold('lattice', list(report), size=self.lattice.size)

    def _stage_monoid(self):
        self.monoid = build_monoid(
            self.lattice,
            cap=int(self.config['monoid_cap']),
            compose_table_limit=int(self.config['compose_table_limit']),
            show_progress=self.show_progress
        )
        self.report.monoid_size = len(self.monoid)
        report = MonoidChecker(self.config).check(self.monoid)
        return _fold('monoid', list(report), size=len(self.monoid))

    def _stage_gamma(self):
        self.algebra = GammaAlgebra(self.monoid)
        self.report.carrier_log2 = self.algebra.carrier_log2()
        verdicts = [check_gamma_structure(self.algebra), check_gamma_minimality(self.algebra, self.budget)]
        return _fold('gamma', verdicts, **self.algebra.describe())

    def _stage_foda(self):
        self.report.foda = check_foda(self.algebra, self.budget)
        return _fold('foda', list(self.report.foda), **{v.name: v.status.value for v in self.report.foda})

    def _stage_psi(self):
        self.psi = psi_object(self.algebra)
        verdicts = [check_ortholattice(self.psi), check_orthomodular(self.psi)]
        return _fold('psi', verdicts, size=self.psi.size)

    def _stage_mu(self):
        self.mu = mu_component(self.lattice, self.algebra)
        exact = Verdict('mu_inverse')
        inverse = self.mu.inverse()
        for m in range(self.lattice.size):
            if inverse(self.psi.index_of(self.algebra.projection(m))) != m:
                exact.fail('inverse', [m])
                break
        return _fold('mu', [_renamed(check_ortho_iso(self.mu), 'mu_iso'), exact])

    def _stage_lambda(self):
        self.lam = lambda_component(
            self.algebra,
            cap=int(self.config['monoid_cap']),
            compose_table_limit=int(self.config['compose_table_limit'])
        )
        verdicts = [
            check_foda_morphism(self.lam, self.morphism_budget),
            check_lambda_bijective(self.lam, self.morphism_budget),
            check_lambda_normal_forms(self.lam, self.morphism_budget),
            check_lambda_word_definition(self.lam),
            check_lambda_neg(self.lam, self.morphism_budget),
        ]
        return _fold('lambda', verdicts, target_monoid_size=len(self.lam.target.monoid))

    def _enumerate_automorphisms(self):
        guard = int(self.config['automorphism_guard'])
        try:
            return enumerate_automorphisms(self.lattice, guard), 'full'
        except SizeGuardError:
            self.logger.warning(
                'lattice has more than {} elements; functor laws and naturality use the identity only'.format(guard)
            )
            return [identity_ortho(self.lattice)], 'identity-only'

    def _stage_functor_laws(self):
        self.automorphisms, coverage = self._enumerate_automorphisms()
        self.report.details['automorphisms'] = len(self.automorphisms)
        self.report.details['automorphism_coverage'] = coverage
        laws = check_both_functor_laws(
            self.algebra, self.automorphisms, self.budget, int(self.config['law_samples'])
        )
        arrows = []
        for k in self._progress(self.automorphisms, 'gamma arrows'):
            arrows.append(check_gamma_foda_morphism(k, self.algebra, budget=self.morphism_budget))
            arrows.append(check_gamma_equivariance(gamma_arrow(k, self.algebra), self.morphism_budget))
        arrows = _fold('gamma_arrows', arrows, morphisms=len(self.automorphisms))
        return _fold('functor_laws', [laws, arrows], morphisms=len(self.automorphisms), coverage=coverage)

    def _stage_naturality(self):
        mu_squares, lambda_squares = [], []
        for k in self._progress(self.automorphisms, 'naturality'):
            mu_squares.append(check_mu_naturality(k, self.algebra, self.algebra, self.mu, self.mu))
            arrow = gamma_arrow(k, self.algebra)
            lambda_squares.append(check_lambda_naturality(arrow, self.lam, self.lam, self.morphism_budget))
        verdicts = [
            _fold('mu_naturality', mu_squares, morphisms=len(mu_squares)),
            _fold('lambda_naturality', lambda_squares, morphisms=len(lambda_squares)),
        ]
        return _fold('naturality', verdicts, morphisms=len(self.automorphisms))


def roundtrip(lattice, config, lattice_id='lattice'):
    r"""Check the equivalence between orthomodular lattices and dynamic algebras on one lattice.

    Stages run in order: lattice checks; the Sasaki monoid; the set algebra
    ``Γ(L)``; its seven axioms; ``Ψ(Γ(L))``; the unit ``μ``; the counit ``λ``
    at ``Γ(L)``; functor laws over the automorphism group; both naturality
    squares for every automorphism. The first failing stage ends the run.

    Args:
        lattice (OrthoLattice): the lattice
        config (Config): the configuration
        lattice_id (str): stable name for the report

    Returns:
        RoundtripReport: the report
    """
    return RoundtripRunner(lattice, config, lattice_id).run()

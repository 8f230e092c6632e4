# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.quick_start
########################
"""

import json
from logging import getLogger

from tqdm import tqdm

from omlbox.checker import CheckReport, LatticeChecker, MonoidChecker, FodaChecker
from omlbox.config import Config
from omlbox.data import create_lattice, create_algebra
from omlbox.equivalence import mu_component, check_mu_naturality, lambda_component, check_lambda_naturality, \
    roundtrip
from omlbox.functors import gamma_object, gamma_arrow, check_gamma_structure, check_both_functor_laws
from omlbox.lattice import enumerate_automorphisms, check_ortho_iso
from omlbox.utils import Budget, Status, InputError, VerificationError, init_logger, init_seed, merge_verdicts

COMMANDS = ['verify-oml', 'gamma', 'check-foda', 'roundtrip', 'automorphisms', 'naturality']


def exit_status(status):
    """``0`` for pass and sampled-pass, ``1`` for fail."""
    return 1 if status == Status.FAIL else 0


def _gamma_object(lattice, config):
    return gamma_object(
        lattice,
        cap=int(config['monoid_cap']),
        compose_table_limit=int(config['compose_table_limit']),
        show_progress=bool(config['show_progress'])
    )


def verify_oml(source, config):
    lattice, lattice_id = create_lattice(source, config)
    report = LatticeChecker(config).check(lattice)
    report.details['lattice'] = lattice_id
    return report


def gamma(source, config):
    r"""Build the Sasaki monoid and the set algebra, and summarise them.

    When ``config['report']`` names a file the JSON report is written there too.
    """
    lattice, lattice_id = create_lattice(source, config)
    algebra = _gamma_object(lattice, config)
    monoid_report = MonoidChecker(config).check(algebra.monoid)
    report = CheckReport('gamma')
    for verdict in monoid_report:
        report.add(verdict)
    report.add(check_gamma_structure(algebra))
    report.details.update(monoid=monoid_report.details, algebra=algebra.describe(), lattice=lattice_id)
    if config['report']:
        with open(config['report'], 'w', encoding='utf-8') as f:
            f.write(dump_json(report.to_dict()))
        getLogger().info('report written to {}'.format(config['report']))
    return report


def check_foda_command(source, config):
    algebra, algebra_id = create_algebra(source, config)
    checker = FodaChecker(config)
    report = checker.check(algebra)
    report.add(checker.check_quotation(algebra))
    report.details['source'] = algebra_id
    return report


def automorphisms(source, config):
    lattice, lattice_id = create_lattice(source, config)
    found = enumerate_automorphisms(lattice, int(config['automorphism_guard']))
    report = CheckReport('automorphisms')
    report.add(merge_verdicts('ortho_iso', [check_ortho_iso(k) for k in found]))
    report.details.update(
        lattice=lattice_id, count=len(found), automorphisms=[k.describe() for k in found]
    )
    getLogger().info('{} has {} automorphisms'.format(lattice_id, len(found)))
    return report


def naturality(source, config):
    r"""Functor laws and both naturality squares over the automorphism group of a lattice."""
    lattice, lattice_id = create_lattice(source, config)
    budget = Budget.from_config(config)
    morphism_budget = Budget.for_morphisms(config)
    algebra = _gamma_object(lattice, config)
    found = enumerate_automorphisms(lattice, int(config['automorphism_guard']))
    mu = mu_component(lattice, algebra)
    lam = lambda_component(
        algebra, cap=int(config['monoid_cap']), compose_table_limit=int(config['compose_table_limit'])
    )
    mu_squares, lambda_squares = [], []
    for k in tqdm(found, desc='naturality', disable=not config['show_progress']):
        mu_squares.append(check_mu_naturality(k, algebra, algebra, mu, mu))
        lambda_squares.append(check_lambda_naturality(gamma_arrow(k, algebra), lam, lam, morphism_budget))
    report = CheckReport('naturality')
    report.add(check_both_functor_laws(algebra, found, budget, int(config['law_samples'])))
    report.add(merge_verdicts('mu_naturality', mu_squares))
    report.add(merge_verdicts('lambda_naturality', lambda_squares))
    report.details.update(lattice=lattice_id, automorphisms=len(found))
    return report


def roundtrip_command(source, config):
    lattice, lattice_id = create_lattice(source, config)
    return roundtrip(lattice, config, lattice_id)


RUNNERS = {
    'verify-oml': verify_oml,
    'gamma': gamma,
    'check-foda': check_foda_command,
    'roundtrip': roundtrip_command,
    'automorphisms': automorphisms,
    'naturality': naturality,
}


def _builtin(value):
    if hasattr(value, 'tolist'):
        return value.tolist()
    if hasattr(value, 'value'):
        return value.value
    return str(value)


def dump_json(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False, default=_builtin) + '\n'


def format_text(report, indent=0):
    """Indented human summary of a report dict."""
    lines = []
    pad = '  ' * indent
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            status = value.get('status')
            lines.append('{}{}:{}'.format(pad, key, ' ' + str(status) if status else ''))
            lines.append(format_text({k: v for k, v in value.items() if k != 'status'}, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append('{}{}:'.format(pad, key))
            lines.extend('{}  - {}'.format(pad, item) for item in value)
        else:
            lines.append('{}{}: {}'.format(pad, key, value))
    return '\n'.join(line for line in lines if line)


def run_omlbox(command=None, source=None, config_file_list=None, config_dict=None, cmd_args=None, stdout=None):
    r""" A fast running api, which runs one command on one lattice or algebra
    and returns its exit status together with the report

    Args:
        command (str): one of ``verify-oml``, ``gamma``, ``check-foda``, ``roundtrip``,
            ``automorphisms`` and ``naturality``
        source (str): ``catalog:SPEC`` or a JSON file path
        config_file_list (list): config files used to modify the parameters
        config_dict (dict): parameters dictionary used to modify the parameters
        cmd_args (list): leftover ``--key=value`` command line tokens
        stdout (file): when given, the report is written there in ``config['format']``

    Returns:
        tuple:
            - int: ``0`` when every check passed, ``1`` otherwise
            - dict: the report; a hard verification error gives a report with
              its class, message and witness

    Raises:
        InputError: unknown command or malformed input
        OSError: unreadable input file
    """
    if command not in RUNNERS:
        raise InputError('unknown command: {}'.format(command))
    if not source:
        raise InputError('command {} needs a lattice: a file path or catalog:SPEC'.format(command))

    # configurations initialization
    config = Config(command=command, config_file_list=config_file_list, config_dict=config_dict, cmd_args=cmd_args)
    if config['format'] not in ('json', 'text'):
        raise InputError('format must be json or text, got {}'.format(config['format']))
    init_seed(config['seed'])
    # logger initialization
    init_logger(config)
    logger = getLogger()
    logger.info(config)

    try:
        report = RUNNERS[command](source, config)
        status, result = exit_status(report.status), report.to_dict()
        logger.info('{} {}: {}'.format(command, source, report.status.value))
    except VerificationError as e:
        logger.error('{} {} failed: {}'.format(command, source, e))
        status = exit_status(Status.FAIL)
        result = {'overall': Status.FAIL.value, 'error': e.__class__.__name__, 'message': str(e), 'witness': e.witness}

    if stdout is not None:
        stdout.write(dump_json(result) if config['format'] == 'json' else format_text(result) + '\n')
    return status, result

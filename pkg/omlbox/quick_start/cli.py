# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.quick_start.cli
######################
"""

import argparse
import sys
from logging import getLogger

from omlbox.quick_start.quick_start import COMMANDS, run_omlbox
from omlbox.utils import InputError

EXIT_INPUT = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors raise :class:`InputError` instead of exiting."""

    def error(self, message):
        raise InputError(message)


def build_parser():
    parser = _ArgumentParser(
        prog='omlbox', description='Orthomodular lattices and dynamic algebras, checked.', allow_abbrev=False
    )
    parser.add_argument('command', choices=COMMANDS, help='the sub-command')
    parser.add_argument('source', help='a lattice JSON file, an algebra JSON file or catalog:SPEC')
    parser.add_argument('--seed', type=int, default=None, help='sampling seed (default 0)')
    parser.add_argument('--samples', type=int, default=None, help='samples per sampled check (default 10000)')
    parser.add_argument(
        '--exhaustive-threshold',
        type=int,
        default=None,
        help='largest number of tuples checked exhaustively (default 2^20)'
    )
    parser.add_argument('--format', choices=['json', 'text'], default=None, help='report format (default text)')
    parser.add_argument('--report', type=str, default=None, help='gamma: also write the JSON report to this file')
    parser.add_argument('--config_files', type=str, default=None, help='config files')
    return parser


def cli_main(argv=None, stdout=None):
    r"""Run the command line and return the exit status.

    ``0``: every check passed; ``1``: a verification failure, with witnesses
    in the report; ``2``: bad input or usage.

    Args:
        argv (list of str): arguments without the program name, ``sys.argv[1:]`` by default
        stdout (file): where the report goes, ``sys.stdout`` by default

    Returns:
        int: the exit status
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        args, cmd_args = build_parser().parse_known_args(argv)
        if args.seed is not None and args.seed < 0:
            raise InputError('seed must not be negative')
        flags = (
            ('seed', args.seed), ('samples', args.samples), ('exhaustive_threshold', args.exhaustive_threshold),
            ('format', args.format), ('report', args.report)
        )
        config_dict = {key: value for key, value in flags if value is not None}
        config_file_list = args.config_files.strip().split(' ') if args.config_files else None
        status, _ = run_omlbox(
            args.command, args.source, config_file_list, config_dict, cmd_args, stdout=stdout or sys.stdout
        )
    except (InputError, OSError) as e:
        getLogger().error('{}: {}'.format(e.__class__.__name__, e))
        sys.stderr.write('omlbox: error: {}\n'.format(e))
        return EXIT_INPUT
    return status

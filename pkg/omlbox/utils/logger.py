# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.utils.logger
###############################
"""

import logging
import os

from omlbox.utils.utils import ensure_dir, get_local_time


def init_logger(config):
    """
    A logger that shows messages on standard error and, when ``log_dir`` is set,
    writes them into a file named after the running command.
    Reports are printed on standard output, so log records never mix with them.

    Args:
        config (Config): An instance object of Config, used to record parameter information.

    Example:
        >>> init_logger(config)
        >>> logger = logging.getLogger()
        >>> logger.info(config)
    """
    sfmt = "%(asctime)-15s %(levelname)s %(message)s"
    sdatefmt = "%d %b %H:%M"
    sformatter = logging.Formatter(sfmt, sdatefmt)

    state = config['state']
    level = getattr(logging, state.upper(), logging.INFO) if isinstance(state, str) else logging.INFO

    sh = logging.StreamHandler()
    sh.setLevel(level)
    sh.setFormatter(sformatter)
    handlers = [sh]

    if config['log_dir']:
        ensure_dir(config['log_dir'])
        logfilename = '{}-{}.log'.format(config['command'] or 'omlbox', get_local_time())
        filefmt = "%(asctime)-15s %(levelname)s %(message)s"
        filedatefmt = "%a %d %b %Y %H:%M:%S"
        fh = logging.FileHandler(os.path.join(config['log_dir'], logfilename))
        fh.setLevel(level)
        fh.setFormatter(logging.Formatter(filefmt, filedatefmt))
        handlers.append(fh)

    logging.basicConfig(level=level, handlers=handlers, force=True)

# -*- coding: utf-8 -*-
# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.utils.utils
################################
"""

import os
import datetime
import random
import zlib

import numpy as np


def get_local_time():
    r"""Get current time

    Returns:
        str: current time
    """
    cur = datetime.datetime.now()
    cur = cur.strftime('%b-%d-%Y_%H-%M-%S')

    return cur


def ensure_dir(dir_path):
    r"""Make sure the directory exists, if it does not exist, create it

    Args:
        dir_path (str): directory path

    """
    if not os.path.exists(dir_path):
        os.makedirs(dir_path)


def init_seed(seed):
    r""" init random seed for random functions in numpy and random

    Args:
        seed (int): random seed
    """
    random.seed(seed)
    np.random.seed(seed % (2 ** 32))


def make_rng(seed, stream):
    r"""Build an independent generator for one named sampling stream.

    Every check draws from its own stream, so a verdict does not depend on
    which other checks ran before it.

    Args:
        seed (int): the run seed (any non-negative integer, up to 64 bits)
        stream (str): name of the sampling stream

    Returns:
        numpy.random.Generator: the seeded generator
    """
    return np.random.default_rng([int(seed), zlib.crc32(stream.encode('utf-8'))])

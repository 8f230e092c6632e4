# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import pytest

from omlbox.config import Config
from omlbox.data import gen_boolean, gen_mo, gen_o6
from omlbox.functors import gamma_object
from omlbox.utils import Budget


@pytest.fixture(scope='session')
def b1():
    return gen_boolean(1)


@pytest.fixture(scope='session')
def b2():
    return gen_boolean(2)


@pytest.fixture(scope='session')
def mo2():
    return gen_mo(2)


@pytest.fixture(scope='session')
def o6():
    return gen_o6()


@pytest.fixture(scope='session')
def gamma_b1(b1):
    return gamma_object(b1)


@pytest.fixture(scope='session')
def gamma_b2(b2):
    return gamma_object(b2)


@pytest.fixture(scope='session')
def gamma_mo2(mo2):
    return gamma_object(mo2)


@pytest.fixture
def small_budget():
    return Budget(exhaustive_threshold=4096, samples=500, seed=3)


@pytest.fixture
def config():
    return Config(command='roundtrip', config_dict={'seed': 7, 'samples': 2000})

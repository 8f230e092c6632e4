# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.data.utils
#################
"""

import json
from logging import getLogger

from omlbox.algebra import parse_dyn_algebra
from omlbox.data.catalog import parse_catalog_spec
from omlbox.functors import gamma_object
from omlbox.lattice import parse_lattice

CATALOG_PREFIX = 'catalog:'


def _read(path):
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def create_lattice(source, config):
    """Load a lattice from ``catalog:SPEC`` or from a JSON file.

    Args:
        source (str): ``catalog:SPEC`` or a file path
        config (Config): supplies ``product_guard``

    Returns:
        tuple:
            - OrthoLattice: the lattice
            - str: its stable identifier (canonical ``catalog:SPEC`` or the path)

    Raises:
        CatalogSpecError: malformed catalog spec
        LatticeFormatError: malformed lattice file
        OSError: unreadable file
    """
    logger = getLogger()
    if source.startswith(CATALOG_PREFIX):
        spec = parse_catalog_spec(source)
        if spec.degenerate:
            logger.warning('{} is the degenerate one-element lattice'.format(spec))
        lattice = spec.build(int(config['product_guard']))
        lattice_id = CATALOG_PREFIX + str(spec)
    else:
        lattice = parse_lattice(_read(source))
        lattice_id = source
    logger.info('loaded {} with {} elements'.format(lattice_id, lattice.size))
    return lattice, lattice_id


def create_algebra(source, config):
    """Load a dynamic algebra.

    A JSON file with a ``mul`` table is an explicit algebra; any other source
    is read as a lattice and turned into its set algebra.

    Returns:
        tuple:
            - AbstractDynAlgebra: the algebra
            - str: its stable identifier
    """
    if not source.startswith(CATALOG_PREFIX):
        text = _read(source)
        try:
            data = json.loads(text)
        except ValueError:
            data = None
        if isinstance(data, dict) and 'mul' in data:
            algebra = parse_dyn_algebra(text)
            getLogger().info('loaded the explicit algebra {} with {} elements'.format(source, algebra.size))
            return algebra, source
    lattice, lattice_id = create_lattice(source, config)
    algebra = gamma_object(
        lattice,
        cap=int(config['monoid_cap']),
        compose_table_limit=int(config['compose_table_limit']),
        show_progress=bool(config['show_progress'])
    )
    return algebra, lattice_id

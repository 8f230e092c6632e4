# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import pytest

from omlbox.config import Config
from omlbox.data import CatalogSpec, parse_catalog_spec, gen_boolean, gen_mo, gen_product, \
    create_lattice, create_algebra
from omlbox.algebra import TableDynAlgebra, serialize_dyn_algebra, tabulate
from omlbox.functors import GammaAlgebra
from omlbox.lattice import check_orthomodular, serialize_lattice
from omlbox.utils import CatalogSpecError, SizeGuardError


@pytest.mark.parametrize(
    'text, canonical', [
        ('boolean:3', 'boolean:3'),
        ('catalog:mo:2', 'mo:2'),
        ('mo2', 'mo:2'),
        ('O6', 'o6'),
        ('product(mo:2, boolean:1)', 'product(mo:2,boolean:1)'),
        ('product(product(boolean:1,boolean:1),o6)', 'product(product(boolean:1,boolean:1),o6)'),
    ]
)
def test_canonical_spec_strings(text, canonical):
    spec = parse_catalog_spec(text)
    assert str(spec) == canonical
    assert parse_catalog_spec(str(spec)) == spec


@pytest.mark.parametrize('text', ['boolean:6', 'mo:0', 'mo:7', 'cube:3', 'product(mo:2)', 'product(mo:2,foo)', ''])
def test_bad_specs(text):
    with pytest.raises(CatalogSpecError):
        parse_catalog_spec(text)


@pytest.mark.parametrize('n', [0, 1, 2, 3, 4, 5])
def test_boolean_sizes(n):
    lattice = gen_boolean(n)
    assert lattice.size == 2 ** n
    assert check_orthomodular(lattice).passed


def test_degenerate_boolean_lattice():
    lattice = gen_boolean(0)
    assert lattice.bottom == lattice.top == 0
    assert parse_catalog_spec('boolean:0').degenerate
    assert not parse_catalog_spec('boolean:1').degenerate


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6])
def test_mo_lattices(n):
    lattice = gen_mo(n)
    assert lattice.size == 2 * n + 2
    assert check_orthomodular(lattice).passed
    assert lattice.is_distributive() == (n == 1)
    atoms = [i for i in range(lattice.size) if i not in (lattice.bottom, lattice.top)]
    for i in atoms:
        assert lattice.join(i, lattice.perp(i)) == lattice.top
        for j in atoms:
            assert lattice.le(i, j) == (i == j)


def test_mo2_names(mo2):
    assert mo2.names == ['0', 'a', "a'", 'b', "b'", '1']


def test_o6_shape(o6):
    a, b = o6.index('a'), o6.index('b')
    assert o6.le(a, b) and o6.le(o6.perp(b), o6.perp(a))
    assert not check_orthomodular(o6).passed


def test_products(b1, mo2, o6):
    square = gen_product(b1, b1)
    assert square.size == 4
    mixed = gen_product(b1, mo2)
    assert mixed.size == 12 and check_orthomodular(mixed).passed
    assert not check_orthomodular(gen_product(o6, b1)).passed
    with pytest.raises(SizeGuardError):
        gen_product(gen_boolean(4), gen_boolean(3), guard=64)


def test_product_guard_through_spec():
    spec = parse_catalog_spec('product(boolean:5,boolean:2)')
    with pytest.raises(SizeGuardError):
        spec.build(product_guard=64)
    assert spec.build(product_guard=128).size == 128


def test_spec_dataclass_equality():
    assert parse_catalog_spec('mo2') == CatalogSpec('mo', 2)
    assert hash(parse_catalog_spec('product(o6,o6)')) == hash(parse_catalog_spec('product( o6 , o6 )'))


def test_create_lattice_from_catalog_and_file(tmp_path, mo2):
    config = Config()
    lattice, lattice_id = create_lattice('catalog:mo2', config)
    assert lattice == mo2 and lattice_id == 'catalog:mo:2'
    path = tmp_path / 'mo2.json'
    path.write_text(serialize_lattice(mo2), encoding='utf-8')
    lattice, lattice_id = create_lattice(str(path), config)
    assert lattice == mo2 and lattice_id == str(path)


def test_create_lattice_missing_file(tmp_path):
    with pytest.raises(OSError):
        create_lattice(str(tmp_path / 'missing.json'), Config())


def test_create_algebra_detects_tables(tmp_path, gamma_b1):
    config = Config()
    algebra, _ = create_algebra('catalog:boolean:1', config)
    assert isinstance(algebra, GammaAlgebra) and len(algebra.monoid) == 2
    path = tmp_path / 'gamma_b1.json'
    path.write_text(serialize_dyn_algebra(tabulate(gamma_b1)), encoding='utf-8')
    algebra, algebra_id = create_algebra(str(path), config)
    assert isinstance(algebra, TableDynAlgebra) and algebra.size == 4
    assert algebra_id == str(path)

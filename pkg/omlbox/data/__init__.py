from omlbox.data.catalog import CatalogSpec, parse_catalog_spec, gen_boolean, gen_mo, gen_o6, gen_product
from omlbox.data.utils import create_lattice, create_algebra

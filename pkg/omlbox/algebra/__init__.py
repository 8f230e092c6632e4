from omlbox.algebra.abstract_algebra import AbstractDynAlgebra, TildeLattice
from omlbox.algebra.table_algebra import TableDynAlgebra, parse_dyn_algebra, serialize_dyn_algebra, tabulate
from omlbox.algebra.morphism import FodaMorphism, identity_foda, compose_foda, carrier_tuples, \
    check_foda_morphism, check_tilde_restriction

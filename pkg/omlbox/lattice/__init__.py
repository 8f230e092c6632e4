from omlbox.lattice.ortholattice import OrthoLattice, parse_lattice, serialize_lattice
from omlbox.lattice.endomap import EndoMap
from omlbox.lattice.sasaki import sasaki_projection, sasaki_hook
from omlbox.lattice.checks import check_ortholattice, check_orthomodular, check_adjunction, \
    check_join_preservation, check_sasaki_laws
from omlbox.lattice.morphism import OrthoMorphism, identity_ortho, compose_ortho, check_ortho_iso, \
    find_isomorphisms, enumerate_automorphisms

from omlbox.functors.gamma import DynSet, GammaAlgebra, GammaMorphism, gamma_object, gamma_arrow, \
    check_gamma_foda_morphism, check_gamma_equivariance, check_gamma_minimality, check_gamma_structure
from omlbox.functors.psi import psi_object, psi_arrow
from omlbox.functors.laws import check_functor_laws, check_gamma_laws, check_psi_laws, check_both_functor_laws

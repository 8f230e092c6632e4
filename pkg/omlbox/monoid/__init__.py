from omlbox.monoid.sasaki_monoid import SasakiMonoid, build_monoid
from omlbox.monoid.checks import check_involutive_monoid, check_star_adjointness, check_witness_words

from omlbox.checker.abstract_checker import AbstractChecker
from omlbox.checker.report import CheckReport, FodaReport
from omlbox.checker.foda_axioms import check_foda1, check_foda2, check_foda3, check_foda4, check_foda5, \
    check_foda6, check_foda7, check_quote_homomorphism, closure
from omlbox.checker.checkers import LatticeChecker, MonoidChecker, FodaChecker, check_foda

from omlbox.utils.logger import init_logger
from omlbox.utils.utils import get_local_time, ensure_dir, init_seed, make_rng
from omlbox.utils.enum_type import *
from omlbox.utils.argument_list import *
from omlbox.utils.exceptions import *
from omlbox.utils.verdict import Verdict, merge_verdicts
from omlbox.utils.sampling import Budget, TupleSource

__all__ = [
    'init_logger', 'get_local_time', 'ensure_dir', 'init_seed', 'make_rng', 'Enum', 'Status', 'CheckMode',
    'general_arguments', 'checking_arguments', 'limit_arguments', 'OmlboxError', 'InputError', 'LatticeFormatError',
    'AlgebraFormatError', 'CatalogSpecError', 'SizeGuardError', 'VerificationError', 'AuditError',
    'ConsistencyError', 'DecompositionError', 'OrthomodularityError', 'Verdict', 'merge_verdicts', 'Budget',
    'TupleSource'
]

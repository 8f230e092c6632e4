# @Time   : 2026/10/17
# @Author : OMLBoxTeam

"""
omlbox.utils.exceptions
#######################

Input errors end a command with exit status 2, verification errors with 1.
"""


class OmlboxError(Exception):
    """Base class of every error raised by omlbox."""


class InputError(OmlboxError, ValueError):
    """Malformed or out-of-range input."""


class LatticeFormatError(InputError):
    """A lattice file or table does not describe a valid ortholattice.

    Args:
        message (str): what went wrong
        witness (object): offending indices, if any
    """

    def __init__(self, message, witness=None):
        super(LatticeFormatError, self).__init__(message)
        self.witness = witness


class AlgebraFormatError(InputError):
    """An explicit dynamic algebra file is malformed."""


class CatalogSpecError(InputError):
    """A ``catalog:SPEC`` string cannot be parsed or is out of range."""


class SizeGuardError(InputError):
    """A structure exceeds a configured size guard."""


class VerificationError(OmlboxError):
    """A hard verification failure carrying a replayable witness.

    Args:
        message (str): what failed
        witness (object): JSON serialisable witness
    """

    def __init__(self, message, witness=None):
        super(VerificationError, self).__init__(message)
        self.witness = witness


class OrthomodularityError(VerificationError):
    """A construction that needs an orthomodular lattice received another one."""


class AuditError(VerificationError):
    """Two words for the same monoid element reverse to different functions."""


class ConsistencyError(VerificationError):
    """An image that must exist in a target structure is missing or disagrees."""


class DecompositionError(VerificationError):
    """An element is not the join of the word elements below it."""

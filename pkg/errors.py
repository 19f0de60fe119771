# Exception types for the gkgrowth toolkit
#
# Library code raises these and never prints; cli.py maps each family to an
# exit code (see config.EXIT_*).


class GrowthError(Exception):
    """Base class for every error raised by gkgrowth"""


class InvalidInput(GrowthError, ValueError):
    """An argument is outside the domain of an operation (e.g. q_int(0))"""


class InexactDivision(GrowthError, ArithmeticError):
    """A division that must be exact in Z[q] left a remainder.

    This never happens for valid q-analogue arithmetic, so seeing it means a bug.
    """


class NonIntegralEvaluation(GrowthError, ArithmeticError):
    """A growth polynomial evaluated to a non-integer at (q0, N)"""


class NotLinked(GrowthError):
    """elementary_op was asked to merge two segments that are not linked"""


class SizeLimitExceeded(GrowthError):
    """A poset or enumeration grew past its configured bound"""


class InsufficientCuspidalData(GrowthError):
    """A full cuspidal growth polynomial was needed but only the leading term is known"""


class UnsupportedMultisegment(GrowthError):
    """Exact growth is not available for this multisegment (linked same-symbol segments)"""

    def __init__(self, message, linked_pair=None):
        super().__init__(message)
        self.linked_pair = linked_pair


class MismatchedSize(GrowthError):
    """Two partitions of different integers were compared"""


class AmbiguousExpansion(GrowthError):
    """Distinct partitions share an orbit dimension, so coefficients cannot be read off"""

    def __init__(self, message, partitions=()):
        super().__init__(message)
        self.partitions = tuple(partitions)


class NotInImage(GrowthError):
    """A growth polynomial is not the image of an integral character expansion"""


class UnsupportedSize(GrowthError):
    """The requested matrix size has no implemented formula"""


class UnknownSymbol(GrowthError, KeyError):
    """A cuspidal symbol id is not declared (problem file or twist table)"""

    def __str__(self):
        return Exception.__str__(self)


class ProblemParseError(GrowthError):
    """Malformed JSON, compact multisegment text or rendered polynomial"""


class ProblemSemanticError(GrowthError):
    """Well-formed input that violates a constraint (e.g. empty multisegment)"""


class OracleInconsistency(GrowthError):
    """Orbit counting disagrees with the orbit-stabilizer count; internal bug"""

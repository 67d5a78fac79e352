"""Exception hierarchy shared by every module.

Each class carries the process exit code the CLI maps it to:
0 success, 2 parameter error, 3 certification/budget failure, 4 I/O error.
"""


class LcsGapError(Exception):
    exit_code = 1


class ParameterError(LcsGapError):
    """Violated precondition or inconsistent parameter set."""

    exit_code = 2


class DegenerateGraphError(ParameterError):
    """Graph too small for the requested quantity (e.g. density needs n >= 2)."""


class StructureError(ParameterError):
    """Input lacks the structural shape a solver requires."""


class WitnessError(ParameterError):
    """A claimed witness fails validation (missing edge, not a subsequence)."""


class BudgetError(LcsGapError):
    """Configured enumeration/state budget exceeded."""

    exit_code = 3


class CertificationError(LcsGapError):
    """A string family failed its pairwise-LCS certification.

    Attributes carry the worst offending pair so callers can report why the
    bound was too aggressive for the chosen alphabet and length.
    """

    exit_code = 3

    def __init__(self, message, worst_pair=None, worst_lcs=None):
        super().__init__(message)
        self.worst_pair = worst_pair
        self.worst_lcs = worst_lcs


class FormatError(LcsGapError):
    """Malformed artifact file."""

    exit_code = 4

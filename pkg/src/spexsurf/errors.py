"""Error taxonomy shared by the library, the service, and the CLI.

Every domain error carries a ``code`` used by the service layer and the CLI
exit-code mapping: precondition -> 2, scale -> 3, nonconvergence -> 4.
"""
from __future__ import annotations


class SpexError(Exception):
    code = "error"


class PreconditionError(SpexError, ValueError):
    """Input violates a documented precondition."""

    code = "precondition"


class ScaleRefusalError(SpexError, RuntimeError):
    """Input is beyond the documented exhaustive envelope."""

    code = "scale"


class NonConvergenceError(SpexError, RuntimeError):
    """Iteration cap hit before the residual target."""

    code = "nonconvergence"

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class Graph6Error(PreconditionError):
    """Malformed graph6 payload; ``offset`` is the first bad byte."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


class SpliceIntegrityError(SpexError, RuntimeError):
    """A face splice changed the host genus; the merge was rejected."""

    code = "precondition"

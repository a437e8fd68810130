"""Exception hierarchy for pardiff.

Every error carries a stable ``slug`` used in CLI diagnostics. The CLI maps
DomainError to exit code 1 and CeilingError to exit code 2.
"""


class PardiffError(Exception):
    slug = "error"


class DomainError(PardiffError):
    """Invalid input or an operation applied outside its precondition."""

    slug = "domain-error"


class CeilingError(PardiffError):
    """A resource guard tripped; raise the configured ceiling to proceed."""

    slug = "resource-ceiling"


class GraphFormatError(DomainError):
    slug = "malformed-line"


class SelfLoopError(DomainError):
    slug = "self-loop"


class DuplicateEdgeError(DomainError):
    slug = "duplicate-edge"


class VertexIndexError(DomainError):
    slug = "index-out-of-range"


class ConfigMismatchError(DomainError):
    slug = "length-mismatch"


class StackLimitError(DomainError):
    """Stack size left the signed 64-bit range the engine promises to honour."""

    slug = "stack-overflow"


class PeriodNotFoundError(DomainError):
    """No repeat within max_steps. Means max_steps was too small, nothing else."""

    slug = "period-not-found"


class InternalInconsistencyError(PardiffError):
    """A state repeat at an offset other than 1 or 2. Indicates an engine bug."""

    slug = "internal-inconsistency"


class IllegalOrientationError(DomainError):
    slug = "illegal-orientation"


class IllegalLocalPatternError(DomainError):
    slug = "illegal-local-pattern"


class NotAnAgreeingPairError(DomainError):
    slug = "not-an-agreeing-pair"


class WindowNotStabilizedError(CeilingError):
    slug = "window-not-stabilized"

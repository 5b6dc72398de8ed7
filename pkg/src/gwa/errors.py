"""Exception hierarchy shared by all modules.

Every error carries a human-readable message naming the violated clause,
so CLI users and tests can pinpoint the problem without a stack trace.
"""


class GwaError(Exception):
    """Base class for all library errors."""


class ParseError(GwaError):
    """Malformed expression or literal; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None
                         else f"{message} (at offset {position})")
        self.position = position


class ValidationError(GwaError):
    """A structural invariant of a value is violated."""


class ContextMismatch(ValidationError):
    """Operands built over different orbit configurations."""


class InvalidWord(ValidationError):
    """Word letters inconsistent with the break pattern or length."""


class InvalidBreakIndex(ValidationError):
    """Path start/end index is not a break of the parameter t."""


class SingularF(ValidationError):
    """Eigen-data contains a zero eigenvalue; the monodromy must be invertible."""


class ZeroLetterPresent(ValidationError):
    """Operation requires a zero-free word; split the module first."""


class PreconditionBreaks(ValidationError):
    """A break-pattern precondition of a tensor rule is not met."""


class GraphConditionError(ValidationError):
    """A labeled graph violates one of the defining conditions (a)-(f)."""

    def __init__(self, clause, message):
        super().__init__(f"condition ({clause}): {message}")
        self.clause = clause


class MathError(GwaError):
    """Exact computation cannot proceed inside the configured field."""


class ZeroConstantTerm(MathError):
    """Companion-matrix construction requires a nonzero constant term."""


class NonSplitSpectrum(MathError):
    """A characteristic polynomial has an irreducible factor of degree > 1
    over the configured cyclotomic field; enlarge the conductor."""

    def __init__(self, factor_repr):
        super().__init__(
            f"spectrum does not split: irreducible factor {factor_repr}; "
            "enlarge the conductor")
        self.factor_repr = factor_repr


class RootExtractionNeeded(MathError):
    """A required r-th root lies outside the configured cyclotomic field."""

    def __init__(self, message, required_conductor=None):
        if required_conductor is not None:
            message += f" (a conductor multiple of {required_conductor} suffices)"
        super().__init__(message)
        self.required_conductor = required_conductor


class OracleError(GwaError):
    """The explicit-matrix decomposition failed to certify a result."""

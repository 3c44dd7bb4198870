"""Exception types shared across the package."""


class HomlyError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(HomlyError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class ParseError(HomlyError, ValueError):
    """Malformed coefficient text; carries the byte offset of the problem."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class DomainError(HomlyError, ValueError):
    """A symbolic coefficient appeared where only rationals are allowed."""


class DimensionMismatch(HomlyError, ValueError):
    """Operands do not share the same dimension."""


class ValidationError(HomlyError, ValueError):
    """Input data refers to unknown names or breaks a structural invariant."""


class EvennessViolation(ValidationError):
    """A map or tensor has a nonzero entry forbidden by the grading."""


class MissingOperation(HomlyError, ValueError):
    """The algebra lacks the binary or ternary operation the caller needs."""


class NotHomogeneous(HomlyError, ValueError):
    """A homogeneous element was required but a mixed-parity one was given."""


class BadArity(HomlyError, ValueError):
    """A twist exponent outside the allowed range."""


class NotEndomorphism(HomlyError, ValueError):
    """The candidate map is not a morphism of the algebra's operations."""

    def __init__(self, report):
        super().__init__(
            "map is not an endomorphism; "
            f"{len(report.violations)} violating tuple(s), first: {report.violations[0].key()}"
        )
        self.report = report


class MapsDoNotCommute(HomlyError, ValueError):
    """The twisting map does not commute with the algebra's twist."""


class NotHomLie(HomlyError, ValueError):
    """The input algebra fails the Hom-Lie checks required here."""

    def __init__(self, report):
        super().__init__(
            "input is not a (multiplicative) Hom-Lie superalgebra; "
            f"{len(report.violations)} violating tuple(s)"
        )
        self.report = report


class NonIdentityTwist(HomlyError, ValueError):
    """A construction stated for identity twist got a twisted algebra."""


class ConflictError(ValidationError):
    """Two explicit table entries contradict each other under skew symmetry."""


class UnknownEntry(HomlyError, KeyError):
    """No catalog entry with the requested name."""


class ConstraintViolation(HomlyError, ValueError):
    """Catalog parameters outside the entry's valid range."""


class NoConstructionPath(HomlyError, ValueError):
    """The catalog entry has no independent construction to cross-check."""

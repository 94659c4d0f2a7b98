"""Exception types shared across the package.

Exit-code contract for the CLI: validation problems -> 2, resource caps -> 3,
internal invariant breaches -> 4.
"""


class FrobintError(Exception):
    """Base class for all package errors."""


class ValidationError(FrobintError):
    """Bad user input (JSON schema, literals, field data).

    ``position`` is a character offset into the offending string when the
    error came from the expression parser, else None.
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None
                         else f"{message} (at position {position})")
        self.position = position


class AxiomViolation(ValidationError):
    """A digit set failed a weak-spanning axiom; carries a counterexample."""

    def __init__(self, axiom, counterexample=None):
        super().__init__(f"digit set violates axiom {axiom!r}")
        self.axiom = axiom
        self.counterexample = counterexample


class DigitSetTooLarge(FrobintError):
    """The constructed digit set exceeds the configured size cap."""


class StateBlowup(FrobintError):
    """Subset construction / exploration exceeded its state cap."""


class CapExceeded(FrobintError):
    """A machine state broke the precomputed degree/height/state caps.

    Never expected on valid inputs; indicates an implementation bug or
    deliberately mis-sized caps.
    """


class CarryBoundExceeded(CapExceeded):
    """A carry in the equality automaton failed its height-decrease check."""


class NotSparse(FrobintError):
    """Operation requires a sparse language but the input is not sparse."""


class NotInGroundField(FrobintError):
    """Orbit-closure input has coordinates outside the base function field."""

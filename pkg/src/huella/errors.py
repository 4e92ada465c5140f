"""Exception types shared across the package."""


class HuellaError(Exception):
    """Base class for all errors raised by this package."""


class ExprError(HuellaError, ValueError):
    """A number expression could not be parsed.

    ``kind`` is one of ``"syntax"``, ``"zero_denominator"``, ``"sqrt_domain"``,
    ``"bad_digit"``; ``position`` is the 0-based index of the offending token.
    """

    def __init__(self, message: str, position: int, kind: str = "syntax"):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.kind = kind


class BudgetExceededError(HuellaError):
    """A digit request went past the configured digit budget."""

    def __init__(self, requested: int, cap: int):
        super().__init__(f"digit request for {requested} digits exceeds budget cap of {cap}")
        self.requested = requested
        self.cap = cap


class MapError(HuellaError, ValueError):
    """A vector map is unknown or malformed."""


class WalkError(HuellaError, ValueError):
    """A walk could not be built (e.g. digit out of range)."""


class ConsistencyError(HuellaError, RuntimeError):
    """Arithmetic and geometric classifications disagree: an implementation bug,
    never a user error."""

"""Exception types shared across the package."""


class FairtentError(Exception):
    """Base class for all package-specific errors."""


class ParameterOutOfRange(FairtentError):
    """Slope parameter outside the admissible window [sqrt(2), 2]."""


class DomainError(FairtentError):
    """Phase-space or formula argument outside its domain."""


class AmbiguousSymbols(FairtentError):
    """A requested symbol count touches guard-ambiguous itinerary entries."""


class AmbiguousOrbit(FairtentError):
    """An orbit hit the symbol guard before the evaluation certified."""


class ItineraryMismatch(FairtentError):
    """A periodic-point candidate failed its defining itinerary check."""


class BudgetExceeded(FairtentError):
    """A combinatorial enumeration outgrew its configured cap."""


class ConvergenceFailure(FairtentError):
    """An iterative evaluator stopped before reaching the requested tolerance."""

    def __init__(self, message: str, last_change: float | None = None):
        super().__init__(message)
        self.last_change = last_change


class NotInjective(FairtentError):
    """Conformality check asked about an interval straddling the turning point."""


class RootIsolationFailure(FairtentError):
    """Pre-sampling found more sign changes than monotonicity permits."""


class VerificationFailure(FairtentError):
    """A computed root or witness failed its independent verification."""


class InsufficientSignal(FairtentError):
    """Too few scales survived the signal condition to fit an exponent."""


class WitnessNotFound(FairtentError):
    """Search budget exhausted without finding the requested witness."""

"""Fair measures and fair entropy of tent maps.

Library layout:

- ``core``       tent-map orbits, symbols, derivatives, periodic points
- ``measure``    fair entropy (series and fixed-point oracle), CDF queries,
                 conformality/invariance checks, a.c.i.p. estimation
- ``paramspace`` boundary parameters, lap partitions, special parameter sets
- ``exponents``  Holder-exponent formulas, estimates and probes
- ``verify``     named check suites used by the CLI verifier
- ``cli``        batch front-end
"""

from .core import (
    DEFAULT_GUARD,
    SQRT2,
    DerivativeTrace,
    SymbolicOrbit,
    TentContext,
    critical_orbit,
    gamma_count,
    make_context,
    periodic_point_q,
    phase_lap_count,
    phi_with_derivative,
    step,
)
from .errors import (
    AmbiguousOrbit,
    AmbiguousSymbols,
    BudgetExceeded,
    ConvergenceFailure,
    DomainError,
    FairtentError,
    InsufficientSignal,
    ItineraryMismatch,
    NotInjective,
    ParameterOutOfRange,
    RootIsolationFailure,
    VerificationFailure,
    WitnessNotFound,
)

__all__ = [
    "DEFAULT_GUARD",
    "SQRT2",
    "DerivativeTrace",
    "SymbolicOrbit",
    "TentContext",
    "critical_orbit",
    "gamma_count",
    "make_context",
    "periodic_point_q",
    "phase_lap_count",
    "phi_with_derivative",
    "step",
    "AmbiguousOrbit",
    "AmbiguousSymbols",
    "BudgetExceeded",
    "ConvergenceFailure",
    "DomainError",
    "FairtentError",
    "InsufficientSignal",
    "ItineraryMismatch",
    "NotInjective",
    "ParameterOutOfRange",
    "RootIsolationFailure",
    "VerificationFailure",
    "WitnessNotFound",
]

__version__ = "0.1.0"

"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside an operation's documented domain."""


class UnsupportedDimensionError(DomainError):
    """Ambient dimension not covered by the double-partition constructions."""


class NumericalError(RuntimeError):
    """Base class for failures of the floating-point verification layer."""


class IndeterminateError(NumericalError):
    """A rank decision fell inside the ambiguity band; retighten tolerances."""


class ProbeDisagreementError(NumericalError):
    """Independent probe vectors disagreed on a transitivity rank test."""

class ParameterDomainError(ValueError):
    """A weight parameter, index or scalar lies outside its admissible range."""


class SingularParameterError(ParameterDomainError):
    """A closed-form coefficient has a vanishing denominator at this parameter."""


class InvariantViolation(RuntimeError):
    """An internal consistency condition failed; indicates a bug, not bad input."""

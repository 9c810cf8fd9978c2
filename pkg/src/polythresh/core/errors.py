class PolythreshError(Exception):
    pass


class DomainError(PolythreshError, ValueError):
    """
    Raised when an argument lies outside the domain of an operation.
    """
    pass


class RegimeError(DomainError):
    """
    Raised when a parameter set violates a hypothesis of a threshold theorem.
    The message always names the violated hypothesis.
    """
    pass


class ConvergenceError(PolythreshError, ArithmeticError):
    pass


class DegeneracyError(PolythreshError, ArithmeticError):
    pass


class CapacityError(PolythreshError):
    pass


class ConfigError(PolythreshError, ValueError):
    pass

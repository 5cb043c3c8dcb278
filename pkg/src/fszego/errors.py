"""Exception types raised on invalid parameters and unsupported operations."""


class ParameterError(ValueError):
    """A parameter lies outside the range an operation is defined on."""


class DomainError(ParameterError):
    """An argument lies outside the domain a formula is stated on."""


class NotUnivalentError(ParameterError):
    """The requested family member is not analytic/univalent in the unit disk."""


class UndefinedFamilyError(ParameterError):
    pass


class ReciprocalUndefinedError(ZeroDivisionError):
    pass


class UnsupportedBranchError(ValueError):
    pass


class NotApplicableError(ValueError):
    """A bound report carries no extremal family to test sharpness against."""

class AlgebraError(ValueError):
    """Base class for invalid inputs to the algebra routines."""


class DimensionMismatch(AlgebraError):
    pass


class GradingError(AlgebraError):
    pass


class NotHomogeneous(AlgebraError):
    pass


class NotNilpotentError(AlgebraError):
    pass


class SingularMapError(AlgebraError):
    pass


class NotZeroFiliformError(AlgebraError):
    pass

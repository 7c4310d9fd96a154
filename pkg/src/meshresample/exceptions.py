"""Exception types raised by the library."""


class SingularTransformError(ValueError):
    """Affine matrix is not invertible."""


class CoefficientUndefinedError(ArithmeticError):
    """Basis norm vanished; the expansion coefficient is undefined for this frequency pair."""


class NoSelectableBasisError(ValueError):
    """Every candidate basis function was skipped or non-finite."""


class EmptyAreaError(ValueError):
    """A reconstruction area holds no samples."""

"""Exception types shared across the package."""


class MatrixFormatError(ValueError):
    """A matrix text document could not be parsed."""


class CircuitFormatError(ValueError):
    """A circuit document is malformed."""


class UnsupportedVersionError(CircuitFormatError):
    """A circuit document declares a format version this library cannot read."""


class DimensionError(ValueError):
    """Shapes, block sizes or mode indices are inconsistent."""


class UnitarityError(ValueError):
    """A matrix that must be unitary is not, within tolerance.

    The measured deviation max|M†M - 1| is available as ``deviation``.
    """

    def __init__(self, message, deviation=None):
        super().__init__(message)
        self.deviation = deviation

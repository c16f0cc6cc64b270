"""Exception types shared across the package."""


class CompositeDimensionError(ValueError):
    """The Hilbert-space dimension is not a prime number."""


class UnsupportedDimensionError(ValueError):
    """The dimension is the prime 2, for which the construction is not defined here."""


class ModulusMismatchError(ValueError):
    """Two field elements with different moduli were combined."""


class ZeroInverseError(ZeroDivisionError):
    """Multiplicative inverse of zero was requested."""


class DimensionMismatchError(ValueError):
    """Matrix or vector dimensions do not agree."""


class NonUnitaryInputError(ValueError):
    """An operation requiring a unitary matrix received a non-unitary one."""


class WrongBasisKindError(ValueError):
    """The operation applies only to shift-clock eigenbases, not the reference basis."""


class IdenticalLinesError(ValueError):
    """Intersection of a line with itself was requested."""


class MixedParametersError(ValueError):
    """Objects built for different dimensions or phase parameters were combined."""


class NonHermitianInputError(ValueError):
    """Real projection of the transform was refused for a non-Hermitian operator."""


class InvalidDensityMatrixError(ValueError):
    """The matrix is not Hermitian with unit trace."""


class FileFormatError(ValueError):
    """A matrix or record file does not conform to its schema."""


class UnknownBasisError(ValueError):
    """A basis label was neither the reference label nor a slope in range."""

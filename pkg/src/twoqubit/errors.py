"""Exception types raised by the synthesis routines."""


class SynthesisError(Exception):
    """Base class for all errors raised by this package."""


class NotUnitary(SynthesisError):
    """Input matrix is not unitary within the requested tolerance."""


class NonSymmetricInput(SynthesisError):
    """A routine requiring a symmetric matrix received a non-symmetric one."""


class NonCommutingInput(SynthesisError):
    """Joint diagonalization was asked for matrices that do not commute."""


class NotSymmetricUnitary(SynthesisError):
    """Spectral factorization requires a matrix that is both symmetric and unitary."""


class NotSpecialOrthogonal(SynthesisError):
    """A matrix expected to be real orthogonal with determinant one is not."""


class NotTensorSplittable(SynthesisError):
    """A diagonal cannot be written as a tensor product of two diagonals."""


class NotTensorDecomposable(SynthesisError):
    """A 4x4 matrix is not a tensor product of two single-qubit matrices."""


class DetMismatch(SynthesisError):
    """No admissible square root assignment reproduces the required determinant."""


class DecompositionFailed(SynthesisError):
    """An internal consistency check failed during decomposition."""


class FormatError(ValueError):
    """Base class for text serialization problems."""


class MatrixFormatError(FormatError):
    """A matrix file does not follow the expected layout."""


class CircuitFormatError(FormatError):
    """A circuit file does not follow the expected layout."""

"""Exception types shared across the package.

Input-validation failures subclass ValueError; numerical/iteration failures
subclass RuntimeError.  Index errors and IO errors use the builtins.
"""


class DimensionMismatch(ValueError):
    """Points of different dimension were combined."""


class ZeroParameter(ValueError):
    """A circle radius parameter that must be nonzero was zero."""


class NotInHalfPlane(ValueError):
    """A point with zero imaginary part was passed where Im != 0 is required."""


class SingularMatrix(ValueError):
    """A 2x2 matrix with zero determinant cannot act on the half-plane."""


class ZeroVector(ValueError):
    """A vector that must be nonzero (after projection) was zero."""


class BadParameter(ValueError):
    """A family or bound parameter is outside its valid range."""


class BadSigma(ValueError):
    """sigma must be a non-square modulo q."""


class DegenerateDistance(ValueError):
    """The distance parameter a is in {0, 4*sigma}, which degenerates the graph."""


class BadResidue(ValueError):
    """q does not lie in the residue class a theorem requires."""


class SizeLimitExceeded(ValueError):
    """The requested graph exceeds the configured vertex limit."""


class TooLarge(ValueError):
    """The instance exceeds the size cap of an exact algorithm."""


class UnsupportedFamily(ValueError):
    """The operation does not apply to this graph family."""


class NotTriangleFree(ValueError):
    """A Ramsey certificate was requested for a graph containing triangles."""


class NoConvergence(RuntimeError):
    """The eigensolver failed to converge."""

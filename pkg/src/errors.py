"""
Domain errors for the geometry toolkit.

Every error raised by a library operation derives from GeometryError, so the
CLI can map the whole family to exit code 1 and print the short `code` name.
"""


class GeometryError(ValueError):
    """Base class for all domain errors."""

    code = "GeometryError"


class ParseError(GeometryError):
    code = "ParseError"


class DimensionMismatchError(GeometryError):
    code = "DimensionMismatch"


# Algebra


class ZeroDivisorError(GeometryError, ZeroDivisionError):
    """Raised when inverting a paracomplex number on the non-division locus."""

    code = "ZeroDivisor"


class NotInvolutiveError(GeometryError):
    code = "NotInvolutive"


# Pseudo-Euclidean forms


class NotSymmetricError(GeometryError):
    code = "NotSymmetric"


class NotLorentzianError(GeometryError):
    code = "NotLorentzian"


class ZeroVectorError(GeometryError):
    code = "ZeroVector"


# Projective geometry


class SpecialPointError(GeometryError):
    code = "SpecialPoint"


class DegenerateImageError(GeometryError):
    code = "DegenerateImage"


class DegenerateCollineationError(GeometryError):
    code = "DegenerateCollineation"


class NullNormError(GeometryError):
    code = "NullNorm"


class NotCollinearError(GeometryError):
    code = "NotCollinear"


class DegenerateConfigurationError(GeometryError):
    code = "DegenerateConfiguration"


class LineMissesQuadricError(GeometryError):
    code = "LineMissesQuadric"


class NotHermitianError(GeometryError):
    code = "NotHermitian"


class NotUnitError(GeometryError):
    code = "NotUnit"


class NotTangentError(GeometryError):
    code = "NotTangent"


# Statistical manifold


class NotInConeError(GeometryError):
    code = "NotInCone"


class NotInteriorError(GeometryError):
    code = "NotInterior"


class InvalidDistributionError(GeometryError):
    code = "InvalidDistribution"


class SingularFamilyError(GeometryError):
    code = "SingularFamily"


class FrameDegenerateError(GeometryError):
    code = "FrameDegenerate"


class ResidualTooLargeError(GeometryError):
    """The frame decomposition left a normal component behind."""

    code = "ResidualTooLarge"

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


# Verification


class NonFiniteError(GeometryError):
    code = "NonFinite"


class UnknownSuiteError(GeometryError):
    code = "UnknownSuite"

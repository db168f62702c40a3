"""Error hierarchy for the face-numbers toolkit.

Every error raised by the operations layer derives from FaceNumbersError.
Errors caused by bad user input additionally derive from UsageError, which
the CLI maps to exit code 2.
"""


class FaceNumbersError(Exception):
    """Base class for all toolkit errors."""


class UsageError(FaceNumbersError):
    """Invalid input supplied by a user (bad file, flag, or parameter)."""


# Complexes
class EmptyInput(UsageError):
    """Facet list is empty or contains an empty facet."""


class DuplicateVertexInFacet(UsageError):
    """A facet lists the same vertex twice."""


class InvalidVertexLabel(UsageError):
    """Vertex labels must be positive integers."""


class FacetParseError(UsageError):
    """A .fct file could not be parsed."""


class FaceNotInComplex(FaceNumbersError):
    """Face is not a face of the complex."""


class VertexNotInComplex(FaceNumbersError):
    """Vertex is not a vertex of the complex."""


class BadSkeletonDim(FaceNumbersError):
    """Skeleton dimension outside [0, dim]."""


class LabelCollision(FaceNumbersError):
    """Two complexes share labels where disjoint labels are required."""


# Fields and matrices
class FieldSpecError(UsageError):
    """Field spec is not "p" or "p^m" with p prime and a supported size."""


class ShapeMismatch(FaceNumbersError):
    """Matrix shapes are incompatible."""


class FieldMismatch(FaceNumbersError):
    """Matrices are defined over different fields."""


# Homology
class BadDimension(FaceNumbersError):
    """Chain degree outside the range of the complex."""


class NotASubcomplex(FaceNumbersError):
    """Relative homology requested for a complex that is not a subcomplex."""


class BadIndex(FaceNumbersError):
    """Index outside the documented range."""


# Manifolds
class NotAManifold(FaceNumbersError):
    """Complex is not a homology manifold over the chosen field."""


class Disconnected(FaceNumbersError):
    """Operation needs a connected complex."""


class NotAHomologySphere(FaceNumbersError):
    """Operation needs a closed homology sphere."""


# Face-number vectors
class LengthMismatch(FaceNumbersError):
    """Vector length does not match the stated dimension."""


class NegativeInput(FaceNumbersError):
    """Argument must be nonnegative."""


class WrongParity(FaceNumbersError):
    """Odd-dimensional (even d) input where the middle-dimensional bound needs d = 2k+1."""


class BettiPreconditionViolated(FaceNumbersError):
    """Betti data violates the stated precondition."""


class DimensionTooSmall(FaceNumbersError):
    """Dimension too small for the requested bound."""


class EmptyBoundary(FaceNumbersError):
    """Operation needs a complex with nonempty boundary."""


# Face ring
class GenericityFailure(FaceNumbersError):
    """Random linear forms failed genericity certification on every retry."""


class FieldTooSmall(FaceNumbersError):
    """Field is too small for generic linear forms."""


class DegreeOutOfRange(FaceNumbersError):
    """Degree outside the computed range of a graded quotient."""


class HilbertMismatch(FaceNumbersError):
    """Monomial count disagrees with the Hilbert function from the h-vector."""


# Generators
class BadParams(UsageError):
    """Generator parameters outside the family's range."""


class UnknownFixture(UsageError):
    """No fixture with this name in the catalog."""


class ValidationFailure(FaceNumbersError):
    """Generated complex failed its postcondition."""


class NotBoundaryFace(FaceNumbersError):
    """Face is not a facet of the boundary."""


class IdentificationCreatesNonManifold(FaceNumbersError):
    """Gluing produced a complex that is not a homology manifold."""


class FaceNotFacet(FaceNumbersError):
    """Face is not a facet of the complex."""

"""Exception hierarchy.

Every error raised by the library derives from CubicPencilError, so callers
can catch one base class.  The leaf names mirror the operation contracts.
"""


class CubicPencilError(Exception):
    pass


# exact field arithmetic
class UnsupportedField(CubicPencilError):
    pass


class DivZero(CubicPencilError):
    pass


class FieldMismatch(CubicPencilError):
    pass


# polynomial layer
class ParseError(CubicPencilError):
    pass


class NotHomogeneous(CubicPencilError):
    pass


class SingularMap(CubicPencilError):
    pass


class ZeroInput(CubicPencilError):
    pass


class SingularPoint(CubicPencilError):
    pass


class NotOnCurve(CubicPencilError):
    pass


# curve geometry
class NotSingular(CubicPencilError):
    pass


class NotSmoothPoint(CubicPencilError):
    pass


class NotSmoothCurve(CubicPencilError):
    pass


class LineComponent(CubicPencilError):
    pass


class InconsistentKnownPoints(CubicPencilError):
    pass


class JUnavailable(CubicPencilError):
    pass


# pencils
class BadParam(CubicPencilError):
    pass


class NotAPencilOfCurves(CubicPencilError):
    pass


class GenericSingular(CubicPencilError):
    pass


class ClassificationContradiction(CubicPencilError):
    pass


# constructions
class NotNineTorsion(CubicPencilError):
    pass


class NotType9(CubicPencilError):
    pass


class NotTangentialTriangle(CubicPencilError):
    pass


class NormalizationFailed(CubicPencilError):
    pass


class RootNotInField(CubicPencilError):
    pass


class BadLambda(CubicPencilError):
    pass


class DegenerateFamilyMember(CubicPencilError):
    pass


# fibration bookkeeping
class NonUniqueInfinitelyNear(CubicPencilError):
    pass


class UnknownCurve(CubicPencilError):
    pass


class UnresolvedParameter(CubicPencilError):
    pass


class InconsistentInput(CubicPencilError):
    pass


class InternalContradiction(CubicPencilError):
    """A situation the underlying theory rules out; indicates a bug."""

"""Exception hierarchy.

Every library error derives from :class:`DynamicsError` so the CLI can map
them to exit status 1 with a one-line message.
"""


class DynamicsError(Exception):
    """Base class for domain errors raised by this package."""


class FieldMismatch(DynamicsError, TypeError):
    """Operands live in different scalar fields."""


class CharacteristicCollision(DynamicsError, ZeroDivisionError):
    """Division by a residue that vanishes in the working field."""


class LeadingCoefficientZero(DynamicsError):
    pass


class MultipleRoots(DynamicsError):
    pass


class NotAMorphism(DynamicsError):
    pass


class SizeCapExceeded(DynamicsError):
    def __init__(self, degree, cap):
        super().__init__(f"size cap exceeded: degree {degree} needs more than {cap} coefficients")
        self.degree = degree
        self.cap = cap


class InexactDivision(DynamicsError):
    pass


class NonScalarRatio(DynamicsError):
    pass


class DegenerateDegree(DynamicsError):
    """Refused because the map has degree 1 and the periodic count degenerates."""


class PreconditionError(DynamicsError):
    pass


class DuplicatePoints(PreconditionError):
    pass


class IrrationalFixedPoints(DynamicsError):
    def __init__(self, factor):
        super().__init__(f"irrational fixed points: unsplit factor {factor}")
        self.factor = factor


class SingularCurve(DynamicsError):
    pass


class NotCMFamily(DynamicsError):
    pass


class RatioUndefined(DynamicsError):
    pass


class YFactorError(DynamicsError):
    """A y-factor that should cancel in a Lattes map did not."""


class DegenerateMapWarning(UserWarning):
    """Informational: the partial-derivative map collapsed to the identity."""


class NewtonDegreeWarning(UserWarning):
    """Informational: r equals deg f, so infinity is not fixed."""

"""Exception hierarchy shared by every module of the package."""


class MldError(ValueError):
    """Base class for all errors raised by :mod:`mld_newton`."""


class DegenerateLine(MldError):
    pass


class VerticalLine(MldError):
    pass


class NonPositiveLambda(MldError):
    pass


class EmptyIdeal(MldError):
    pass


class ZeroVector(MldError):
    pass


class NegativeComponent(MldError):
    pass


class NoLatticeStep(MldError):
    """No exponent yields an integral step along the facet.

    Only possible if the polygon is not a weighted Minkowski sum of the
    given exponents; for genuine inputs this indicates a bug.
    """


class RadiusTooSmall(MldError):
    pass


class NoComputingDivisorInRadius(MldError):
    pass


class PolygonWithoutOne(MldError):
    pass


class PolygonContainsOne(MldError):
    pass


class ProofInvariantViolated(AssertionError):
    """A step of the constructive argument failed an invariant it must satisfy."""


class EmptySet(MldError):
    pass


class InvariantViolation(MldError):
    pass

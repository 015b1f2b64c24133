"""Exception types shared across the package."""


class BetheAGError(Exception):
    """Base class for all package errors."""


class SingularMatrix(BetheAGError):
    """An exact inverse was requested for a matrix with zero determinant.

    In trace-formula context this signals a denominator that vanishes at
    some Bethe solution.
    """


class InterpolationBreakdown(BetheAGError):
    """Thiele reciprocal differences hit a division by zero.

    The caller should re-seed with a different sample set.
    """


class PoleProximity(BetheAGError):
    """A rational-function evaluation point is too close to a pole."""


class InconsistentIdeal(BetheAGError):
    """The reduced Groebner basis is {1}: the system has no solutions."""


class NotZeroDimensional(BetheAGError):
    """The quotient ring is infinite-dimensional."""


class SymmetrizationFailure(BetheAGError):
    """No w-linear eliminant exists; the input was not symmetric."""


class UnsupportedMomentum(BetheAGError):
    """Only quasi-momenta Q0 in {0, pi} are supported."""


class FitMismatch(BetheAGError):
    """Rational-function reconstruction failed cross-validation."""


class NonConvergence(BetheAGError):
    """Aberth iteration failed to reach the residual target."""

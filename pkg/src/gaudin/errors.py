"""Exception types callers are expected to catch."""


class PoleError(ArithmeticError):
    """A denominator vanished while evaluating a rational expression.

    ``pair`` holds the two offending values when known.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DimensionCapError(RuntimeError):
    """Module construction exceeded the configured dimension cap."""


class ProjectionError(ValueError):
    """Projection target vanishes or does not span a line."""


class NewtonError(RuntimeError):
    """Base class for Newton solver failures."""


class SingularJacobianError(NewtonError):
    pass


class DivergedError(NewtonError):
    """Step damping failed to reduce the residual."""


class MaxIterationsError(NewtonError):
    pass

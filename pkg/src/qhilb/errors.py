class ParameterError(ValueError):
    """Arguments fall outside the range where a formula is known to hold."""


class ColengthMismatch(ValueError):
    """A normal-form ideal does not have the colength its profile predicts."""


class DisjointnessViolation(AssertionError):
    """A scheme has both an overlong vertical and an overlong horizontal line."""


class BadPrimeError(ZeroDivisionError):
    """A denominator vanishes modulo the chosen prime."""

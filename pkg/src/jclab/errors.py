class JcLabError(Exception):
    """Base class for library errors."""


class TruncationTooSmall(JcLabError):
    pass


class NonFinite(JcLabError):
    pass


class NotHermitian(JcLabError):
    pass


class DegenerateSqueeze(JcLabError):
    """Closed-form PCD is singular (no thermal photons); use the matrix route."""


class InvalidDensity(JcLabError):
    pass


class NotNormalized(JcLabError):
    pass


class ZeroMeanField(JcLabError):
    pass

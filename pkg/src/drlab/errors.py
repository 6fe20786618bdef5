"""Exception and warning types raised across the package."""


class DrlabError(Exception):
    """Base class for all errors raised by drlab."""


class ParameterError(DrlabError, ValueError):
    """Ring or box parameters outside the supported range."""


class RangeError(DrlabError, ValueError):
    """An index (degree, cell, partition size) outside its valid range."""


class ShapeError(DrlabError):
    """A derived Young diagram failed a structural consistency check."""


class InhomogeneousError(DrlabError, ValueError):
    """A polynomial expected to be homogeneous (or linear) is not."""


class ResourceError(DrlabError):
    """The requested brute-force computation exceeds the configured ceiling."""


class FieldWarning(UserWarning):
    """Results computed over two different prime fields disagree."""

"""Exception types raised across the package."""


class EalaError(Exception):
    """Base class for all package errors."""


class DegreeOverflow(EalaError, OverflowError):
    """A lattice degree or degree box left the supported integer range."""


class NonInvertible(EalaError, ArithmeticError):
    """Inverse requested for an element that is not a nonzero monomial."""


class BadRootIndex(EalaError, ValueError):
    pass


class NotAnEigenvector(EalaError):
    pass


class BoxExhausted(EalaError):
    """No section of ``m`` has support inside the requested degree box."""

    def __init__(self, box):
        super().__init__(f"no section with support in box {box}")
        self.box = box


class NotInSl2(EalaError):
    pass


class CubicFailed(EalaError):
    pass


class Y0NonZero(EalaError):
    pass


class DPrimeBracketNonZero(EalaError):
    pass


class ProbeUndecided(EalaError):
    """A candidate family for a generator of ``ker m`` was too large to settle linearly."""


class ConfigError(EalaError, ValueError):
    pass


class ReportWriteError(EalaError, OSError):
    pass

"""
Error types raised by the filiform cohomology toolkit
"""


class FiliformError(ValueError):
    """Base class for invalid input or failed preconditions"""


class NotPrime(FiliformError):
    pass


class ReducibleModulus(FiliformError):
    pass


class CharTooSmall(FiliformError):
    pass


class PrimeTooLarge(FiliformError):
    pass


class DivisionByZero(FiliformError, ZeroDivisionError):
    pass


class DimensionMismatch(FiliformError):
    pass


class ImageNotContained(FiliformError):
    """The coboundary space is not inside the cocycle space"""


class GradeOutOfRange(FiliformError):
    pass


class IndexOutOfRange(FiliformError):
    pass


class UnknownClaim(FiliformError):
    pass


class NotACocycle(FiliformError):
    """d2* of the cochain does not vanish"""


class MalformedLambda(FiliformError):
    pass


class MalformedModulus(FiliformError):
    pass

"""Exception hierarchy for the theoria engine"""


class TheoriaError(Exception):
    """Base class for every error raised by the engine."""


class MalformedPoint(TheoriaError):
    pass


class MalformedMask(TheoriaError):
    pass


class MalformedBlock(TheoriaError):
    pass


class UnsupportedIntersection(TheoriaError):
    """A block pair lies outside the exact intersection table."""

    def __init__(self, left, right, reason=""):
        self.left = left
        self.right = right
        self.reason = reason
        message = f"cannot intersect {type(left).__name__} with {type(right).__name__}"
        if reason:
            message += f": {reason}"
        super().__init__(message)


class EnumerationLimit(UnsupportedIntersection):
    """A finite piece is too large to list explicitly."""

    def __init__(self, block, free_bits, cap):
        self.free_bits = free_bits
        self.cap = cap
        super().__init__(block, block, f"{free_bits} free coordinates exceed the cap of {cap}")


class UnsupportedComparison(TheoriaError):
    pass


class NotClosed(TheoriaError):
    pass


class NotGenerating(TheoriaError):
    pass


class NoLGS(TheoriaError):
    pass


class NotComparable(TheoriaError):
    pass


class PreconditionFailed(TheoriaError):
    pass


class CapExceeded(TheoriaError):
    """A fixed-point or enumeration exceeded its cap; `partial` holds what was built."""

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class DepthTooLarge(TheoriaError):
    pass


class ParseError(TheoriaError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class UndefinedName(TheoriaError):
    pass


class UnknownSuite(TheoriaError):
    pass

"""Exception types raised by semigreen."""


class SemigroupError(Exception):
    """Base class for all semigreen errors."""


class IndexOutOfRangeError(SemigroupError, ValueError):
    pass


class NonAssociativeError(SemigroupError, ValueError):
    def __init__(self, x, y, z):
        self.triple = (x, y, z)
        super().__init__(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")


class MixedVariantsError(SemigroupError, TypeError):
    pass


class DimensionMismatchError(SemigroupError, ValueError):
    pass


class SizeLimitExceededError(SemigroupError):
    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"semigroup has more than {limit} elements")


class EmptySubsetError(SemigroupError, ValueError):
    pass


class DJMismatchError(SemigroupError):
    """D computed as R o L disagrees with J; only a bug can cause this."""

    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"D and J disagree on ({x}, {y})")


class UnknownClassError(SemigroupError, KeyError):
    pass


class NotRightSimpleError(SemigroupError):
    pass


class NotLeftCancellativeError(SemigroupError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"{a}*{b} == {a}*{c} with {b} != {c}")


class InheritanceError(SemigroupError):
    """A containment or inheritance theorem failed: an implementation bug."""


class ParseError(SemigroupError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")

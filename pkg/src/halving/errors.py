"""Exception hierarchy.

Every input problem raises a subclass of :class:`HalvingError` so the CLI can
map it to exit code 2 with a one-line diagnostic.
"""


class HalvingError(ValueError):
    pass


class OddSize(HalvingError):
    pass


class DuplicatePoints(HalvingError):
    def __init__(self, i, j):
        super().__init__(f"points {i} and {j} coincide")
        self.indices = (i, j)


class CollinearTriple(HalvingError):
    def __init__(self, i, j, k):
        super().__init__(f"points {i}, {j}, {k} are collinear")
        self.indices = (i, j, k)


class IndexOutOfRange(HalvingError, IndexError):
    pass


class SingularTransform(HalvingError):
    pass


class DegenerateExtent(HalvingError):
    pass


class GeneralPositionClash(HalvingError):
    pass


class RetryLimitExceeded(RuntimeError):
    """Raised when the cross construction never verifies; indicates a bug."""


class ExhaustedSampling(HalvingError):
    pass


class InvariantViolation(RuntimeError):
    pass


class NotAComponentUnion(HalvingError):
    pass


class ParseError(HalvingError):
    def __init__(self, source, line, message):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line

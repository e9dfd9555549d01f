"""Exception hierarchy for the polyomino ideal toolkit."""


class PolyIdealError(Exception):
    """Base class for all toolkit errors."""


class ParseError(PolyIdealError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyCollectionError(PolyIdealError):
    pass


class DisconnectedError(PolyIdealError):
    """Two cells of the input lie in distinct edge-connected components."""

    def __init__(self, cell_a, cell_b):
        self.cells = (cell_a, cell_b)
        super().__init__(f"cells {cell_a} and {cell_b} are not connected")


class NotProperError(PolyIdealError):
    def __init__(self, interval):
        self.interval = interval
        super().__init__(f"interval {interval} is not proper")


class NotClosedPathError(PolyIdealError):
    """The cell set admits no cyclic ordering satisfying the closed-path conditions."""

    def __init__(self, condition, witnesses=()):
        self.condition = condition
        self.witnesses = tuple(witnesses)
        super().__init__(f"not a closed path (violated: {condition}; witnesses: {self.witnesses})")


class ZeroPolynomialError(PolyIdealError):
    pass


class YNotSubsetError(PolyIdealError):
    def __init__(self, stray):
        self.stray = stray
        super().__init__(f"order set contains non-vertices: {sorted(stray)[:4]}")


class HasWPentominoError(PolyIdealError):
    pass


class HasRWHeptominoError(PolyIdealError):
    pass


class IndexOutOfRangeError(PolyIdealError):
    pass


class MissingConfigurationsError(PolyIdealError):
    pass


class PatternMismatchError(PolyIdealError):
    pass


class NotCertifiedError(PolyIdealError):
    pass


class NotMemberError(PolyIdealError):
    pass


class DegreeBoundError(PolyIdealError):
    pass


class GenerationTimeoutError(PolyIdealError):
    pass

"""Exception types shared across the package."""


class EdgeExpandError(Exception):
    """Base class for all errors raised by this package."""


class LoopEdge(EdgeExpandError):
    def __init__(self, v: int):
        super().__init__(f"loop edge ({v},{v}) is not allowed in a simple graph")
        self.v = v


class DuplicateEdge(EdgeExpandError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u},{v}) given more than once")
        self.u = u
        self.v = v


class VertexOutOfRange(EdgeExpandError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} outside universe [0,{n})")
        self.v = v
        self.n = n


class EmptySet(EdgeExpandError):
    pass


class EmptySide(EdgeExpandError):
    pass


class SameVertex(EdgeExpandError):
    pass


class TooSmall(EdgeExpandError):
    pass


class TooLarge(EdgeExpandError):
    pass


class V2NotInS(EdgeExpandError):
    pass


class Infeasible(EdgeExpandError):
    pass


class ParseError(EdgeExpandError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

"""Exception hierarchy shared by all heptacol sub-packages.

Promise violations are reported as values (see
``heptacol.Recognition.recog_forbidden.PromiseViolation``); the classes
below cover malformed input, branch-local conflicts and broken internal
invariants.
"""


class HeptacolError(Exception):
    """Base class for every error raised by heptacol."""


class GraphError(HeptacolError, ValueError):
    """Malformed graph construction input."""


class LoopEdge(GraphError):

    def __init__(self, vertex: int):
        super().__init__(f"loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRange(GraphError):

    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} outside 0..{n - 1}")
        self.vertex = vertex
        self.n = n


class DuplicateEdge(GraphError):

    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge {{{u}, {v}}}")
        self.edge = (u, v)


class InstanceSyntaxError(HeptacolError, ValueError):
    """Instance or colouring file does not follow the line grammar."""

    def __init__(self, line_no: int, message: str):
        # not cooperative: subclasses also derive from the GraphError kinds
        HeptacolError.__init__(self, f"line {line_no}: {message}")
        self.line_no = line_no


class LoopEdgeLine(InstanceSyntaxError, LoopEdge):

    def __init__(self, line_no: int, vertex: int):
        super().__init__(line_no, f"loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRangeLine(InstanceSyntaxError, VertexOutOfRange):

    def __init__(self, line_no: int, vertex: int, n: int):
        super().__init__(line_no, f"vertex {vertex} outside 1..{n}")
        self.vertex = vertex
        self.n = n


class DuplicateEdgeLine(InstanceSyntaxError, DuplicateEdge):

    def __init__(self, line_no: int, u: int, v: int):
        super().__init__(line_no, f"duplicate edge {{{u}, {v}}}")
        self.edge = (u, v)


class DuplicateListLine(InstanceSyntaxError):
    pass


class EmptyList(InstanceSyntaxError):
    pass


class Conflict(HeptacolError):
    """A branch emptied a colour list or seeded a colour outside a list."""

    def __init__(self, vertex: int, cause: str):
        super().__init__(f"conflict at vertex {vertex} ({cause})")
        self.vertex = vertex
        self.cause = cause


class PreconditionBreach(HeptacolError):
    """The residual instance still holds a vertex with three colours."""


class InternalInvariantError(HeptacolError, AssertionError):
    """A structural assertion backed by the correctness argument failed."""


class ClauseOutOfRange(HeptacolError, IndexError):
    pass


class SizeGuard(HeptacolError, ValueError):
    pass


class RejectionBudgetExceeded(HeptacolError, RuntimeError):
    pass

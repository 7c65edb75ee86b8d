"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ProlificError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ProlificError, ValueError):
    """Invalid graph construction input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class EmptyGraph(ProlificError, ValueError):
    """A parameter undefined on the graph with no vertices was requested."""


class Disconnected(ProlificError, ValueError):
    pass


class NotProlific(ProlificError, ValueError):
    pass


class InvalidDescriptor(ProlificError, ValueError):
    pass


class CapExceeded(ProlificError, ValueError):
    """Enumeration requested beyond the supported vertex count."""


class MalformedGraph6(ProlificError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownCheck(ProlificError, KeyError):
    def __str__(self) -> str:
        return f"unknown check {self.args[0]!r}"


class BudgetExceeded(ProlificError):
    """A solver node/time cap or an iteration size cap was hit.

    ``resource`` names the cap (``"nodes"``, ``"time"``, ``"vertices"``,
    ``"iterations"``) and ``detail`` carries free-form context.
    """

    def __init__(self, resource: str, detail: str = ""):
        self.resource = resource
        self.detail = detail
        msg = f"budget exceeded ({resource})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)

import typing

if typing.TYPE_CHECKING:
    from chromapoly.types.trace import ReductionStats, TraceFrame


class ChromapolyError(Exception):
    """Base error. `exit_code` is what the CLI exits with when it surfaces."""

    exit_code: typing.ClassVar[int] = 1

    def __init__(self, detail: typing.Text):
        super().__init__(detail)
        self.detail = detail


class GraphValidationError(ChromapolyError, ValueError):
    pass


class EdgeNotPresentError(ChromapolyError, KeyError):
    def __init__(self, edge: typing.Tuple[int, int]):
        super().__init__(f"Edge {{{edge[0]},{edge[1]}}} is not present in the graph")
        self.edge = edge

    def __str__(self) -> str:
        return self.detail


class FamilyParameterError(ChromapolyError, ValueError):
    pass


class NotATreeError(ChromapolyError, ValueError):
    pass


class InexactDivisionError(ChromapolyError, ArithmeticError):
    pass


class DivisionByZeroError(ChromapolyError, ZeroDivisionError):
    pass


class InstanceTooLargeError(ChromapolyError, ValueError):
    pass


class EdgeListParseError(ChromapolyError, ValueError):
    exit_code = 2

    def __init__(self, line_number: int, message: typing.Text):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
        self.message = message


class UnknownDatasetError(ChromapolyError, KeyError):
    exit_code = 2

    def __str__(self) -> str:
        return self.detail


class ResourceLimitExceededError(ChromapolyError):
    exit_code = 3

    def __init__(
        self,
        detail: typing.Text,
        *,
        stats: "ReductionStats",
        partial: typing.List["TraceFrame"],
    ):
        super().__init__(detail)
        self.stats = stats
        self.partial = partial

"""Exception hierarchy shared by every ordgraph module."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graphs and failed graph operations."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonIndependentBlock(GraphError):
    """A partition block contains an edge, so it cannot collapse to one vertex."""

    def __init__(self, block: int, edge: tuple[int, int]) -> None:
        self.block = block
        self.edge = edge
        super().__init__(f"block {block} contains edge {edge[0]}-{edge[1]}")


class AntiparallelConflict(GraphError):
    """Two blocks receive arcs in both directions."""

    def __init__(self, block_i: int, block_j: int) -> None:
        self.block_i = block_i
        self.block_j = block_j
        super().__init__(f"blocks {block_i} and {block_j} receive arcs in both directions")


class BoundExceeded(GraphError):
    def __init__(self, what: str, value: int, bound: int) -> None:
        self.value = value
        self.bound = bound
        super().__init__(f"{what} = {value} exceeds the configured bound {bound}")


class OverlappingDoubles(GraphError):
    pass

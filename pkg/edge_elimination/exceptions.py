from typing import Optional


class Error(Exception):
    """Base class of every error raised by edge_elimination."""


class InvalidEdgeError(Error, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else 'invalid edge reference'


class ExponentOverflowError(Error, OverflowError):
    pass


class VertexLimitExceeded(Error):
    def __init__(self, vertex_count: int, limit: int) -> None:
        self.vertex_count: int = vertex_count
        self.limit: int = limit
        super().__init__(
            f'graph has {vertex_count} vertices, the limit is {limit} '
            f'(raise it with --max-vertices)'
        )


class LoopNotAllowedError(Error, ValueError):
    pass


class SeriesInversionError(Error, ValueError):
    pass


class DomainError(Error, ValueError):
    pass


class GraphParseError(Error, ValueError):
    def __init__(
        self, message: str, line: Optional[int] = None, filename: Optional[str] = None
    ) -> None:
        self.line: Optional[int] = line
        self.filename: Optional[str] = filename
        location = filename or '<input>'
        if line is not None:
            location = f'{location}:{line}'
        super().__init__(f'{location}: {message}')


class PolyParseError(Error, ValueError):
    pass


class OracleLimitExceeded(Error):
    def __init__(
        self, vertex_count: int, edge_count: int, max_vertices: int, max_edges: int
    ) -> None:
        self.vertex_count: int = vertex_count
        self.edge_count: int = edge_count
        super().__init__(
            f'graph has {vertex_count} vertices and {edge_count} edges, the '
            f'exhaustive oracles stop at {max_vertices} vertices and {max_edges} edges'
        )

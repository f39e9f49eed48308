from typing import Iterator, List, Tuple

from edge_elimination import snooper_to_methods
from edge_elimination.exceptions import GraphParseError
from edge_elimination.multigraph import Multigraph

from .base import Parser

COMMENT_PREFIX: str = '#'


@snooper_to_methods(max_variable_length=None)
class GraphTextParser(Parser[Multigraph]):
    """Reads the plain edge-list format::

        # comment lines start with '#'
        n m
        u v      (m lines, 0-based labels, 'u u' is a loop)

    Repeated edge lines are parallel edges. Blank lines are ignored.
    """

    def _lines(self) -> Iterator[Tuple[int, str]]:
        for number, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.strip()
            if line and not line.startswith(COMMENT_PREFIX):
                yield number, line

    def _integers(self, number: int, line: str, what: str) -> Tuple[int, int]:
        fields = line.split()
        if len(fields) != 2:
            raise self._error(f'expected {what}, got {line!r}', number)
        try:
            first, second = int(fields[0]), int(fields[1])
        except ValueError:
            raise self._error(f'expected {what} as integers, got {line!r}', number)
        return first, second

    def _error(self, message: str, line: int) -> GraphParseError:
        return GraphParseError(message, line=line, filename=self.filename)

    def parse(self) -> Multigraph:
        lines = self._lines()
        header = next(lines, None)
        if header is None:
            raise GraphParseError(
                'missing header line "n m"', line=1, filename=self.filename
            )
        header_number, header_line = header
        vertex_count, edge_total = self._integers(
            header_number, header_line, 'header "n m"'
        )
        if vertex_count < 0 or edge_total < 0:
            raise self._error('vertex and edge counts must be nonnegative', header_number)

        edges: List[Tuple[int, int]] = []
        last_number = header_number
        for number, line in lines:
            last_number = number
            if len(edges) == edge_total:
                raise self._error(
                    f'found more than the {edge_total} edges declared in the header',
                    number,
                )
            u, v = self._integers(number, line, 'edge "u v"')
            for label in (u, v):
                if not 0 <= label < vertex_count:
                    raise self._error(
                        f'vertex {label} outside 0..{vertex_count - 1}', number
                    )
            edges.append((u, v))

        if len(edges) != edge_total:
            raise self._error(
                f'header declares {edge_total} edges, found {len(edges)}', last_number
            )
        return Multigraph(vertex_count, edges)

from collections import Counter
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from edge_elimination.exceptions import InvalidEdgeError

Pair = Tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u <= v else (v, u)


class EdgeRef(NamedTuple):
    u: int
    v: int
    multiplicity_index: int = 0

    @classmethod
    def of(cls, u: int, v: int, multiplicity_index: int = 0) -> 'EdgeRef':
        return cls(*_pair(u, v), multiplicity_index)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def pair(self) -> Pair:
        return _pair(self.u, self.v)


class Multigraph:
    """Finite undirected multigraph on vertices 0..vertex_count-1.

    Loops and parallel edges are allowed; the edge multiset is stored as a
    sorted tuple of ``(u, v, multiplicity)`` with ``u <= v``. Instances are
    immutable, every operation returns a new graph.
    """

    __slots__ = ('_vertex_count', '_edges', '_counts', '_hash')

    def __init__(self, vertex_count: int, edges: Iterable[Tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError(f'vertex count must be nonnegative, got {vertex_count}')
        counts: Counter = Counter()
        for u, v in edges:
            for label in (u, v):
                if not 0 <= label < vertex_count:
                    raise ValueError(
                        f'edge {{{u},{v}}} uses vertex {label} '
                        f'outside 0..{vertex_count - 1}'
                    )
            counts[_pair(u, v)] += 1
        self._init(vertex_count, counts)

    def _init(self, vertex_count: int, counts: Mapping[Pair, int]) -> None:
        self._vertex_count: int = vertex_count
        self._counts: Dict[Pair, int] = {p: c for p, c in counts.items() if c > 0}
        self._edges: Tuple[Tuple[int, int, int], ...] = tuple(
            (u, v, c) for (u, v), c in sorted(self._counts.items())
        )
        self._hash: Optional[int] = None

    @classmethod
    def from_counts(cls, vertex_count: int, counts: Mapping[Pair, int]) -> 'Multigraph':
        graph = cls.__new__(cls)
        graph._init(vertex_count, counts)
        return graph

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edge_count(self) -> int:
        return sum(self._counts.values())

    @property
    def edge_multiset(self) -> Tuple[Tuple[int, int, int], ...]:
        return self._edges

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v, _ in self._edges)

    def multiplicity(self, u: int, v: int) -> int:
        return self._counts.get(_pair(u, v), 0)

    def degree(self, vertex: int) -> int:
        """Loops count twice."""
        total = 0
        for u, v, c in self._edges:
            if u == vertex:
                total += c
            if v == vertex:
                total += c
        return total

    def edges(self) -> Iterator[EdgeRef]:
        """One reference per parallel copy, in label order."""
        for u, v, c in self._edges:
            for index in range(c):
                yield EdgeRef(u, v, index)

    def edge_pairs(self) -> List[Pair]:
        return [(e.u, e.v) for e in self.edges()]

    def neighbours(self) -> List[Dict[int, int]]:
        adjacency: List[Dict[int, int]] = [{} for _ in range(self._vertex_count)]
        for u, v, c in self._edges:
            adjacency[u][v] = adjacency[u].get(v, 0) + c
            if u != v:
                adjacency[v][u] = adjacency[v].get(u, 0) + c
        return adjacency

    def _require(self, edge: EdgeRef) -> Pair:
        pair = _pair(edge.u, edge.v)
        if not 0 <= edge.multiplicity_index < self._counts.get(pair, 0):
            raise InvalidEdgeError(f'edge {edge} does not exist in {self!r}')
        return pair

    def delete_edge(self, edge: EdgeRef) -> 'Multigraph':
        pair = self._require(edge)
        counts = dict(self._counts)
        counts[pair] -= 1
        return Multigraph.from_counts(self._vertex_count, counts)

    def contract_edge(self, edge: EdgeRef) -> 'Multigraph':
        u, v = self._require(edge)
        if u == v:
            return self.delete_edge(edge)
        # v merges into u; labels above v shift down by one
        relabel = [
            u if w == v else (w - 1 if w > v else w) for w in range(self._vertex_count)
        ]
        counts: Counter = Counter()
        for (a, b), c in self._counts.items():
            if (a, b) == (u, v):
                c -= 1
            if c:
                counts[_pair(relabel[a], relabel[b])] += c
        return Multigraph.from_counts(self._vertex_count - 1, counts)

    def extract_edge(self, edge: EdgeRef) -> 'Multigraph':
        u, v = self._require(edge)
        return self.remove_vertices({u, v})

    def remove_vertices(self, removed: Set[int]) -> 'Multigraph':
        kept = [w for w in range(self._vertex_count) if w not in removed]
        return self.induced(kept)

    def induced(self, vertices: Sequence[int]) -> 'Multigraph':
        """Sub-multigraph on `vertices`, relabelled 0.. in the given order."""
        position = {w: i for i, w in enumerate(vertices)}
        counts: Counter = Counter()
        for (a, b), c in self._counts.items():
            if a in position and b in position:
                counts[_pair(position[a], position[b])] += c
        return Multigraph.from_counts(len(vertices), counts)

    def relabel(self, permutation: Sequence[int]) -> 'Multigraph':
        """Vertex w of self becomes permutation[w]."""
        if sorted(permutation) != list(range(self._vertex_count)):
            raise ValueError(f'{permutation} is not a permutation of the vertices')
        counts: Counter = Counter()
        for (a, b), c in self._counts.items():
            counts[_pair(permutation[a], permutation[b])] += c
        return Multigraph.from_counts(self._vertex_count, counts)

    def disjoint_union(self, other: 'Multigraph') -> 'Multigraph':
        shift = self._vertex_count
        counts: Counter = Counter(self._counts)
        for (a, b), c in other._counts.items():
            counts[(a + shift, b + shift)] += c
        return Multigraph.from_counts(shift + other._vertex_count, counts)

    def connected_components(self) -> List['Multigraph']:
        adjacency = self.neighbours()
        seen = [False] * self._vertex_count
        components: List[Multigraph] = []
        for start in range(self._vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            stack, members = [start], [start]
            while stack:
                vertex = stack.pop()
                for neighbour in adjacency[vertex]:
                    if not seen[neighbour]:
                        seen[neighbour] = True
                        stack.append(neighbour)
                        members.append(neighbour)
            components.append(self.induced(sorted(members)))
        return components

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self._vertex_count == other._vertex_count and self._edges == other._edges
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertex_count, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f'Multigraph({self._vertex_count}, {self.edge_pairs()!r})'


def empty_graph() -> Multigraph:
    return Multigraph(0)


def edgeless_graph(n: int) -> Multigraph:
    return Multigraph(n)


def path_graph(n: int) -> Multigraph:
    if n < 0:
        raise ValueError(f'path length must be nonnegative, got {n}')
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    """Connected 2-regular graph on n vertices; C_1 is a loop, C_2 a double edge."""
    if n < 0:
        raise ValueError(f'cycle length must be nonnegative, got {n}')
    if n == 0:
        return empty_graph()
    if n == 1:
        return Multigraph(1, [(0, 0)])
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def delete_edge(graph: Multigraph, edge: EdgeRef) -> Multigraph:
    return graph.delete_edge(edge)


def contract_edge(graph: Multigraph, edge: EdgeRef) -> Multigraph:
    return graph.contract_edge(edge)


def extract_edge(graph: Multigraph, edge: EdgeRef) -> Multigraph:
    return graph.extract_edge(edge)


def connected_components(graph: Multigraph) -> List[Multigraph]:
    return graph.connected_components()

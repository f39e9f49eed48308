"""
Exact canonical form of a multigraph.

Colour refinement on loop counts and neighbour multiplicities, then
individualisation of each vertex of the first non-singleton cell, explored
exhaustively. The key is the smallest edge encoding over all leaves of the
search tree, so it is equal for two graphs exactly when they are isomorphic.
"""

import struct
from typing import Dict, List, NewType, Optional, Sequence, Tuple

from .base import Multigraph

CanonicalKey = NewType('CanonicalKey', bytes)

Partition = List[List[int]]

_HEADER = struct.Struct('>II')
_EDGE = struct.Struct('>III')


def encode(graph: Multigraph, order: Sequence[int]) -> bytes:
    """Edge multiset of `graph` after moving vertex order[i] to position i."""
    position = [0] * graph.vertex_count
    for index, vertex in enumerate(order):
        position[vertex] = index
    edges = sorted(
        (min(position[u], position[v]), max(position[u], position[v]), c)
        for u, v, c in graph.edge_multiset
    )
    return _HEADER.pack(graph.vertex_count, len(edges)) + b''.join(
        _EDGE.pack(*edge) for edge in edges
    )


def refine(partition: Partition, adjacency: List[Dict[int, int]]) -> Partition:
    while True:
        cell_of: Dict[int, int] = {}
        for index, cell in enumerate(partition):
            for vertex in cell:
                cell_of[vertex] = index

        refined: Partition = []
        for cell in partition:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple, List[int]] = {}
            for vertex in cell:
                links = adjacency[vertex]
                neighbourhood = sorted(
                    (cell_of[w], c) for w, c in links.items() if w != vertex
                )
                signature = (links.get(vertex, 0), tuple(neighbourhood))
                groups.setdefault(signature, []).append(vertex)
            refined.extend(groups[signature] for signature in sorted(groups))

        if len(refined) == len(partition):
            return refined
        partition = refined


class _Search:
    def __init__(self, graph: Multigraph) -> None:
        self.graph = graph
        self.adjacency = graph.neighbours()
        self.best: Optional[bytes] = None

    def run(self, partition: Partition) -> None:
        partition = refine(partition, self.adjacency)
        target = next((i for i, cell in enumerate(partition) if len(cell) > 1), None)
        if target is None:
            candidate = encode(self.graph, [cell[0] for cell in partition])
            if self.best is None or candidate < self.best:
                self.best = candidate
            return
        cell = partition[target]
        for vertex in cell:
            rest = [w for w in cell if w != vertex]
            self.run(partition[:target] + [[vertex], rest] + partition[target + 1 :])


def canonical_key(graph: Multigraph) -> CanonicalKey:
    if graph.vertex_count == 0:
        return CanonicalKey(_HEADER.pack(0, 0))
    search = _Search(graph)
    search.run([list(range(graph.vertex_count))])
    assert search.best is not None
    return CanonicalKey(search.best)


def canonical_form(graph: Multigraph) -> Multigraph:
    """Representative of the isomorphism class, decoded from the key."""
    key = canonical_key(graph)
    vertex_count, edge_total = _HEADER.unpack_from(key, 0)
    counts = {}
    for i in range(edge_total):
        u, v, c = _EDGE.unpack_from(key, _HEADER.size + i * _EDGE.size)
        counts[(u, v)] = c
    return Multigraph.from_counts(vertex_count, counts)

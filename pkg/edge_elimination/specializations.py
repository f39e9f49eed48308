"""
Specializations of xi by substitution, and exhaustive oracles that compute the
same polynomials straight from their combinatorial definitions.

Variable bookkeeping:

* matching polynomial M(G, x, y) = xi(G, x, 0, y): x marks uncovered vertices,
  y marks matching edges (xi's z is renamed to y);
* bivariate chromatic polynomial P(G, x, y) = xi(G, x, -1, x - y): x colours
  in total, y of them proper;
* covered components polynomial C(G, x, y, z) = xi(G, x, y, xyz - xy): x marks
  components, y edges, z components holding at least one edge.
"""

from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from edge_elimination import families
from edge_elimination.config import EngineConfig
from edge_elimination.engine import xi
from edge_elimination.exceptions import (
    DomainError,
    LoopNotAllowedError,
    OracleLimitExceeded,
)
from edge_elimination.multigraph import Multigraph
from edge_elimination.polyring import X, Y, Z, Poly, eval_float, substitute
from edge_elimination.polyring.poly import Monomial, Substitution
from edge_elimination.types import FloatPoint, Specialization

SUBSTITUTIONS: Dict[Specialization, Substitution] = {
    Specialization.matching: {'x': X, 'y': Poly(), 'z': Y},
    Specialization.chromatic2: {'x': X, 'y': Poly.constant(-1), 'z': X - Y},
    Specialization.covered: {'x': X, 'y': Y, 'z': X * Y * Z - X * Y},
}

# the command line refuses loops for both; bivariate_chromatic itself accepts them
LOOP_FREE: Tuple[Specialization, ...] = (
    Specialization.matching,
    Specialization.chromatic2,
)

# the oracles enumerate 2^m edge subsets
ORACLE_MAX_VERTICES: int = 6
ORACLE_MAX_EDGES: int = 8


def _reject_loops(graph: Multigraph, what: str) -> None:
    if graph.has_loops:
        raise LoopNotAllowedError(f'loops not allowed: {what} needs a loop-free graph')


def specialize(poly: Poly, which: Specialization) -> Poly:
    """Apply one of the substitutions to an already computed xi."""
    return substitute(poly, SUBSTITUTIONS[Specialization(which)])


def matching_poly(graph: Multigraph, config: Optional[EngineConfig] = None) -> Poly:
    _reject_loops(graph, 'the matching polynomial')
    return specialize(xi(graph, config), Specialization.matching)


def bivariate_chromatic(
    graph: Multigraph, config: Optional[EngineConfig] = None
) -> Poly:
    return specialize(xi(graph, config), Specialization.chromatic2)


def covered_components(
    graph: Multigraph, config: Optional[EngineConfig] = None
) -> Poly:
    return specialize(xi(graph, config), Specialization.covered)


def specialize_point(point: FloatPoint, which: Specialization) -> FloatPoint:
    """The point at which xi takes the value of the specialization at point."""
    sigma = SUBSTITUTIONS[Specialization(which)]
    return FloatPoint(
        x=eval_float(sigma['x'], point),
        y=eval_float(sigma['y'], point),
        z=eval_float(sigma['z'], point),
    )


def specialized_path_closed(n: int, point: FloatPoint, which: Specialization) -> float:
    return families.xi_path_closed(n, specialize_point(point, which))


def specialized_cycle_closed(n: int, point: FloatPoint, which: Specialization) -> float:
    which = Specialization(which)
    if n == 1 and which in LOOP_FREE:
        raise LoopNotAllowedError(
            f'loops not allowed: C_1 is a loop and {which.value} needs a '
            f'loop-free graph'
        )
    return families.xi_cycle_closed(n, specialize_point(point, which))


def check_oracle_size(graph: Multigraph) -> None:
    if graph.vertex_count > ORACLE_MAX_VERTICES or graph.edge_count > ORACLE_MAX_EDGES:
        raise OracleLimitExceeded(
            graph.vertex_count, graph.edge_count, ORACLE_MAX_VERTICES, ORACLE_MAX_EDGES
        )


def _subsets(items: Sequence) -> Iterator[Tuple]:
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _networkx_graph(
    graph: Multigraph, edges: Sequence[Tuple[int, int]]
) -> nx.MultiGraph:
    spanning = nx.MultiGraph()
    spanning.add_nodes_from(range(graph.vertex_count))
    spanning.add_edges_from(edges)
    return spanning


def _accumulate(terms: Dict[Monomial, int], a: int, b: int, c: int) -> None:
    monomial = Monomial(a, b, c)
    terms[monomial] = terms.get(monomial, 0) + 1


def oracle_matching(graph: Multigraph) -> Poly:
    """Sum over matchings of x^(uncovered vertices) y^(matching edges)."""
    _reject_loops(graph, 'the matching oracle')
    check_oracle_size(graph)
    terms: Dict[Monomial, int] = {}
    for subset in _subsets(graph.edge_pairs()):
        covered = [vertex for edge in subset for vertex in edge]
        if len(set(covered)) == len(covered):
            _accumulate(terms, graph.vertex_count - len(covered), len(subset), 0)
    return Poly(terms)


def oracle_covered(graph: Multigraph) -> Poly:
    """Sum over edge subsets A of x^k(A) y^|A| z^(components of (V, A) with an edge)."""
    check_oracle_size(graph)
    terms: Dict[Monomial, int] = {}
    for subset in _subsets(graph.edge_pairs()):
        spanning = _networkx_graph(graph, subset)
        components = list(nx.connected_components(spanning))
        covered = sum(
            1 for component in components if spanning.subgraph(component).size() > 0
        )
        _accumulate(terms, len(components), len(subset), covered)
    return Poly(terms)


def _distinct_pairs(graph: Multigraph) -> List[Tuple[int, int]]:
    # parallel copies impose the same colouring constraint
    return [(u, v) for u, v, _ in graph.edge_multiset]


def oracle_chromatic2(graph: Multigraph, x_val: int, y_val: int) -> int:
    """Maps V -> {1..x_val} with no edge monochromatic in a colour from {1..y_val}."""
    if x_val < 0 or y_val < 0:
        raise DomainError('colour counts must be nonnegative')
    if y_val > x_val:
        raise DomainError(f'y ({y_val}) must not exceed x ({x_val})')
    _reject_loops(graph, 'the bivariate chromatic oracle')
    check_oracle_size(graph)
    pairs = _distinct_pairs(graph)
    return sum(
        1
        for colouring in product(range(1, x_val + 1), repeat=graph.vertex_count)
        if not any(
            colouring[u] == colouring[v] and colouring[u] <= y_val for u, v in pairs
        )
    )


def oracle_chromatic(graph: Multigraph, k: int) -> int:
    """Proper k-colourings."""
    if k < 0:
        raise DomainError('colour counts must be nonnegative')
    _reject_loops(graph, 'the chromatic oracle')
    check_oracle_size(graph)
    pairs = _distinct_pairs(graph)
    return sum(
        1
        for colouring in product(range(k), repeat=graph.vertex_count)
        if all(colouring[u] != colouring[v] for u, v in pairs)
    )

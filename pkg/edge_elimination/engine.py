"""
The edge elimination polynomial of a multigraph by its defining recursion:

    xi(G) = xi(G - e) + y * xi(G / e) + z * xi(G † e),

multiplicative over disjoint unions, with xi(empty) = 1 and xi(K_1) = x.
"""

import random
import threading
from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple

from edge_elimination import snooper_to_methods
from edge_elimination.config import EdgePolicy, EngineConfig
from edge_elimination.exceptions import VertexLimitExceeded
from edge_elimination.multigraph import CanonicalKey, EdgeRef, Multigraph, canonical_key
from edge_elimination.polyring import ONE, X, Y, Z, Poly
from edge_elimination.types import EngineStats


class EdgeSelector(ABC):
    @abstractmethod
    def select(self, graph: Multigraph) -> EdgeRef:
        raise NotImplementedError


class MinDegreeSelector(EdgeSelector):
    """An edge at a minimum-degree vertex; on a path this is an end edge."""

    def select(self, graph: Multigraph) -> EdgeRef:
        degrees = [graph.degree(v) for v in range(graph.vertex_count)]
        vertex = min(
            (v for v in range(graph.vertex_count) if degrees[v]),
            key=lambda v: (degrees[v], v),
        )
        u, v, _ = next(
            (u, v, c) for u, v, c in graph.edge_multiset if vertex in (u, v)
        )
        return EdgeRef(u, v, 0)


class FirstEdgeSelector(EdgeSelector):
    def select(self, graph: Multigraph) -> EdgeRef:
        u, v, _ = graph.edge_multiset[0]
        return EdgeRef(u, v, 0)


class LastEdgeSelector(EdgeSelector):
    def select(self, graph: Multigraph) -> EdgeRef:
        u, v, c = graph.edge_multiset[-1]
        return EdgeRef(u, v, c - 1)


class RandomEdgeSelector(EdgeSelector):
    def __init__(self, seed: int = 0) -> None:
        self.random = random.Random(seed)

    def select(self, graph: Multigraph) -> EdgeRef:
        u, v, c = self.random.choice(graph.edge_multiset)
        return EdgeRef(u, v, self.random.randrange(c))


def make_selector(policy: EdgePolicy, seed: int = 0) -> EdgeSelector:
    if policy == EdgePolicy.first:
        return FirstEdgeSelector()
    if policy == EdgePolicy.last:
        return LastEdgeSelector()
    if policy == EdgePolicy.random:
        return RandomEdgeSelector(seed)
    return MinDegreeSelector()


class MemoCache:
    """Connected-component results keyed by canonical key.

    Safe to share between threads; concurrent writers store identical values,
    the last one wins.
    """

    def __init__(self) -> None:
        self._values: Dict[CanonicalKey, Poly] = {}
        self._lock = threading.Lock()

    def get(self, key: CanonicalKey) -> Optional[Poly]:
        with self._lock:
            return self._values.get(key)

    def put(self, key: CanonicalKey, value: Poly) -> None:
        with self._lock:
            self._values[key] = value

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._values)


SHARED_CACHE: MemoCache = MemoCache()


@snooper_to_methods(max_variable_length=None)
class XiEngine:
    def __init__(
        self,
        config: Optional[EngineConfig] = None,
        selector: Optional[EdgeSelector] = None,
        cache: Optional[MemoCache] = None,
    ) -> None:
        self.config: EngineConfig = config or EngineConfig()
        self.selector: EdgeSelector = selector or make_selector(
            self.config.edge_policy, self.config.seed
        )
        self._cache: Optional[MemoCache] = cache
        self.stats: EngineStats = EngineStats()

    def _new_cache(self) -> Optional[MemoCache]:
        if not self.config.memo:
            return None
        if self._cache is not None:
            return self._cache
        if self.config.shared_cache:
            return SHARED_CACHE
        return MemoCache()

    def compute_with_stats(self, graph: Multigraph) -> Tuple[Poly, EngineStats]:
        if graph.vertex_count > self.config.max_vertices:
            raise VertexLimitExceeded(graph.vertex_count, self.config.max_vertices)
        self.stats = EngineStats()
        cache = self._new_cache()
        result = self._xi(graph, cache)
        return result, self.stats

    def compute(self, graph: Multigraph) -> Poly:
        return self.compute_with_stats(graph)[0]

    def _xi(self, graph: Multigraph, cache: Optional[MemoCache]) -> Poly:
        result = ONE
        for component in graph.connected_components():
            result = result * self._xi_connected(component, cache)
        return result

    def _xi_connected(self, graph: Multigraph, cache: Optional[MemoCache]) -> Poly:
        if not graph.edge_multiset:
            # a connected graph without edges is a single vertex
            return X

        key: Optional[CanonicalKey] = None
        if cache is not None:
            key = canonical_key(graph)
            cached = cache.get(key)
            if cached is not None:
                self.stats.cache_hits += 1
                return cached

        self.stats.nodes += 1
        edge = self.selector.select(graph)
        value = (
            self._xi(graph.delete_edge(edge), cache)
            + Y * self._xi(graph.contract_edge(edge), cache)
            + Z * self._xi(graph.extract_edge(edge), cache)
        )

        if cache is not None and key is not None:
            cache.put(key, value)
            self.stats.peak_cache_size = max(self.stats.peak_cache_size, len(cache))
        return value


def xi(graph: Multigraph, config: Optional[EngineConfig] = None) -> Poly:
    return XiEngine(config).compute(graph)


def xi_with_stats(
    graph: Multigraph, config: Optional[EngineConfig] = None
) -> Tuple[Poly, EngineStats]:
    return XiEngine(config).compute_with_stats(graph)

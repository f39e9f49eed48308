import random
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Dict, List, Tuple

import pytest

from edge_elimination.multigraph import Multigraph, canonical_key
from edge_elimination.types import FloatPoint

DATA_PATH: Path = Path(__file__).parent / 'data'

HALF_STEPS: List[float] = [-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5]
Z_STEPS: List[float] = [-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5]
NEAR_BOUNDARY_OFFSET: float = 2.0 ** -24


def enumerate_multigraphs(
    max_vertices: int, max_edges: int, loops: bool
) -> List[Multigraph]:
    """Every multigraph within the bounds, one per isomorphism class."""
    seen: Dict[bytes, Multigraph] = {}
    for n in range(max_vertices + 1):
        pairs: List[Tuple[int, int]] = [
            (u, v) for u in range(n) for v in range(u, n) if loops or u != v
        ]
        for m in range(max_edges + 1):
            if m and not pairs:
                break
            for edges in combinations_with_replacement(pairs, m):
                graph = Multigraph(n, edges)
                seen.setdefault(canonical_key(graph), graph)
    return list(seen.values())


def random_multigraph(
    rng: random.Random, max_vertices: int, max_edges: int, loops: bool = True
) -> Multigraph:
    n = rng.randint(1, max_vertices)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        edges.append((u, v))
    return Multigraph(n, edges)


@pytest.fixture(scope='session')
def loop_free_corpus() -> List[Multigraph]:
    return enumerate_multigraphs(5, 6, loops=False)


@pytest.fixture(scope='session')
def looped_corpus() -> List[Multigraph]:
    return enumerate_multigraphs(5, 6, loops=True)


@pytest.fixture(scope='session')
def random_corpus() -> List[Multigraph]:
    rng = random.Random(20100725)
    return [random_multigraph(rng, 6, 8) for _ in range(100)]


@pytest.fixture(scope='session')
def grid_points() -> List[FloatPoint]:
    return [
        FloatPoint(x=x, y=y, z=z) for x in HALF_STEPS for y in HALF_STEPS for z in Z_STEPS
    ]


@pytest.fixture(scope='session')
def boundary_points() -> List[FloatPoint]:
    """Points with z = -((x + y) / 2)^2, where the discriminant is exactly zero."""
    return [
        FloatPoint(x=x, y=y, z=-(((x + y) / 2) ** 2))
        for x in HALF_STEPS
        for y in HALF_STEPS
    ]


@pytest.fixture(scope='session')
def near_boundary_points() -> List[FloatPoint]:
    points = []
    for x in HALF_STEPS:
        for y in HALF_STEPS:
            if x + y == 0:
                continue
            boundary = -(((x + y) / 2) ** 2)
            for offset in (NEAR_BOUNDARY_OFFSET, -NEAR_BOUNDARY_OFFSET):
                points.append(FloatPoint(x=x, y=y, z=boundary + offset))
    return points

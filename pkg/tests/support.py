"""Shared builders for the test suite.

Everything here is deliberately dumb: tests should depend on hand-written
constructions, not on the code under test.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from typing import Iterator, Sequence

from dimsolver import Graph


def graph(n: int, edges: Sequence[tuple[int, int, float]]) -> Graph:
    return Graph(n, tuple((u, v, float(w)) for u, v, w in edges))


def path(weights: Sequence[float]) -> Graph:
    """Path with one weight per edge; n = len(weights) + 1."""
    return graph(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)])


def cycle(weights: Sequence[float]) -> Graph:
    n = len(weights)
    return graph(n, [(i, (i + 1) % n, w) for i, w in enumerate(weights)])


def star(spokes: Sequence[float]) -> Graph:
    """Center 0, leaves 1..k with the given spoke weights."""
    return graph(len(spokes) + 1, [(0, i + 1, w) for i, w in enumerate(spokes)])


def complete(n: int, weight: float = 1.0) -> Graph:
    return graph(n, [(u, v, weight) for u, v in itertools.combinations(range(n), 2)])


def random_graph(rng: random.Random, n: int, p: float, wmax: int = 10) -> Graph:
    edges = [
        (u, v, float(rng.randint(1, wmax)))
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return graph(n, edges)


def random_corpus(
    count: int,
    seed: int,
    n_lo: int = 2,
    n_hi: int = 9,
    probs: Sequence[float] = (0.2, 0.4, 0.6, 0.8),
) -> Iterator[Graph]:
    """Seeded stream of small weighted graphs covering all (n, p) cells."""
    rng = random.Random(seed)
    cells = list(itertools.product(range(n_lo, n_hi + 1), probs))
    for i in range(count):
        n, p = cells[i % len(cells)]
        yield random_graph(rng, n, p)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if side[v] == -1:
                    side[v] = side[u] ^ 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return False
    return True


# Golden instances used across test modules. Weights chosen so the minimum
# is unique where a test wants a unique witness.
P4_527 = path([5.0, 2.0, 7.0])
K3_123 = graph(3, [(0, 1, 1.0), (0, 2, 2.0), (1, 2, 3.0)])
C4_UNIT = cycle([1.0, 1.0, 1.0, 1.0])
C5_UNIT = cycle([1.0] * 5)
C6_UNIT = cycle([1.0] * 6)
STAR_419 = star([4.0, 1.0, 9.0])

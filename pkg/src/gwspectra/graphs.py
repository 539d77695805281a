"""Graph constructors and distance-based matrices.

Vertices are 0..order-1.  In copies(a, complete(m)) the c-th copy occupies
indices c*m..(c+1)*m-1, and join(g1, g2) keeps g1 first, so the generalized
wheel has the hub cliques at 0..a*m-1 and the cycle at a*m..a*m+n-1 -- the
block layout the closed-form spectra are derived in.

All matrices are numpy int64 arrays.  Entries stay tiny (distances and
transmissions of graphs capped at MAX_ORDER vertices), so int64 arithmetic
is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MAX_ORDER",
    "GraphNotConnectedError",
    "Graph",
    "WheelParams",
    "complete",
    "cycle",
    "copies",
    "join",
    "generalized_wheel",
    "adjacency_matrix",
    "distance_matrix",
    "transmission_matrix",
    "dl_matrix",
    "dq_matrix",
    "regular_degree",
    "is_connected",
]

# Keeps every distance/transmission far inside int64 range.
MAX_ORDER = 10_000


class GraphNotConnectedError(ValueError):
    """Distance-based matrices are only defined for connected graphs."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of (i, j) pairs, i < j."""

    order: int
    edges: frozenset

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"graph order must be in [1, {MAX_ORDER}], got {self.order}")
        for edge in self.edges:
            i, j = edge
            if not (0 <= i < j < self.order):
                raise ValueError(f"bad edge {edge} for order {self.order}")

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.order
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


@dataclass(frozen=True)
class WheelParams:
    """Parameters (a, m, n) of the wheel a*K_m joined to C_n."""

    a: int
    m: int
    n: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"copy count a must be >= 1, got {self.a}")
        if self.m < 1:
            raise ValueError(f"clique size m must be >= 1, got {self.m}")
        if self.n < 3:
            raise ValueError(f"cycle length n must be >= 3, got {self.n}")

    @property
    def order(self) -> int:
        return self.a * self.m + self.n


def _check_order(order: int, what: str):
    if order > MAX_ORDER:
        raise ValueError(f"{what} would have {order} vertices, cap is {MAX_ORDER}")


def complete(m: int) -> Graph:
    """Complete graph on m vertices."""
    if m < 1:
        raise ValueError(f"complete graph needs m >= 1, got {m}")
    _check_order(m, "complete graph")
    return Graph(m, frozenset((i, j) for i in range(m) for j in range(i + 1, m)))


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    _check_order(n, "cycle")
    edges = {(i, i + 1) for i in range(n - 1)}
    edges.add((0, n - 1))
    return Graph(n, frozenset(edges))


def copies(k: int, g: Graph) -> Graph:
    """Disjoint union of k copies of g; copy c occupies a contiguous block."""
    if k < 1:
        raise ValueError(f"copy count must be >= 1, got {k}")
    _check_order(k * g.order, "disjoint union")
    edges = set()
    for c in range(k):
        base = c * g.order
        for i, j in g.edges:
            edges.add((base + i, base + j))
    return Graph(k * g.order, frozenset(edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Join: g1 and g2 side by side plus every edge between them."""
    n1 = g1.order
    _check_order(n1 + g2.order, "join")
    edges = set(g1.edges)
    for i, j in g2.edges:
        edges.add((n1 + i, n1 + j))
    for i in range(n1):
        for j in range(g2.order):
            edges.add((i, n1 + j))
    return Graph(n1 + g2.order, frozenset(edges))


def generalized_wheel(params: WheelParams) -> Graph:
    """a copies of K_m joined to C_n."""
    return join(copies(params.a, complete(params.m)), cycle(params.n))


def _adjacency_lists(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.order)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def is_connected(g: Graph) -> bool:
    adj = _adjacency_lists(g)
    seen = [False] * g.order
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.order


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.int64)
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1
    return a


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths by BFS from every vertex."""
    n = g.order
    adj = _adjacency_lists(g)
    dist = np.full((n, n), -1, dtype=np.int64)
    for source in range(n):
        row = dist[source]
        row[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = row[u]
            for w in adj[u]:
                if row[w] < 0:
                    row[w] = du + 1
                    queue.append(w)
        if (row < 0).any():
            raise GraphNotConnectedError(
                f"vertex {source} does not reach the whole graph"
            )
    return dist


def transmission_matrix(g: Graph) -> np.ndarray:
    """Diagonal matrix of distance-matrix row sums."""
    return np.diag(distance_matrix(g).sum(axis=1))


def dl_matrix(g: Graph) -> np.ndarray:
    """Distance Laplacian: transmissions minus distances."""
    dist = distance_matrix(g)
    return np.diag(dist.sum(axis=1)) - dist


def dq_matrix(g: Graph) -> np.ndarray:
    """Distance signless Laplacian: transmissions plus distances."""
    dist = distance_matrix(g)
    return np.diag(dist.sum(axis=1)) + dist


def regular_degree(g: Graph) -> int | None:
    """Common vertex degree, or None if the graph is not regular."""
    deg = g.degree_sequence()
    first = deg[0]
    return first if all(d == first for d in deg) else None

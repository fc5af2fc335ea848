"""Immutable simple connected graphs with canonical indexing and distance primitives.

Vertices are integers 0..n-1.  Edges are stored as a lexicographically
sorted tuple of pairs (u, v) with u < v; the position of a pair in that
tuple is the edge's index, which is stable across runs and used by every
downstream provenance map.  All-pairs hop distances are computed eagerly
at construction (one BFS per source) and shared read-only, so distance
queries are table lookups.  All arithmetic is exact integer hop counts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DisconnectedError, GraphError, LoopEdgeError, TooSmallError


class MixedElement(NamedTuple):
    """A vertex or an edge, the unit distinguished by mixed resolving sets."""

    kind: str  # "vertex" or "edge"
    index: int


def vertex_element(v: int) -> MixedElement:
    return MixedElement("vertex", v)


def edge_element(j: int) -> MixedElement:
    return MixedElement("edge", j)


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph; construct via :func:`build_graph`."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    distances: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge {u, v} in the sorted edge list; GraphError if absent."""
        pair = (u, v) if u < v else (v, u)
        lo, hi = 0, len(self.edges)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.edges[mid] < pair:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.edges) and self.edges[lo] == pair:
            return lo
        raise GraphError(f"no edge {pair}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Canonicalize and validate an edge list into a Graph.

    Pairs are normalized to u < v, deduplicated, and sorted; loops,
    out-of-range endpoints, fewer than two vertices, and disconnected
    inputs are rejected.
    """
    if n < 2:
        raise TooSmallError(f"need at least 2 vertices, got {n}")
    normalized = set()
    for u, v in edges:
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        normalized.add((u, v) if u < v else (v, u))
    sorted_edges = tuple(sorted(normalized))

    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted_edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)

    distances = _all_pairs_bfs(n, adjacency)
    for row in distances:
        if any(d < 0 for d in row):
            raise DisconnectedError("graph is not connected")
    return Graph(n=n, edges=sorted_edges, adjacency=adjacency, distances=distances)


def _all_pairs_bfs(n: int, adjacency: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for source in range(n):
        dist = [-1] * n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return tuple(rows)


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Hop-count distance matrix, d[u][v] = length of a shortest u,v-path."""
    return g.distances


def vertex_edge_distance(g: Graph, v: int, edge_idx: int) -> int:
    """Distance from a vertex to an edge: the nearer of the two endpoints."""
    a, b = g.edges[edge_idx]
    row = g.distances[v]
    return min(row[a], row[b])


def edge_edge_distance(g: Graph, e: int, f: int) -> int:
    """Minimum distance over endpoint pairs; 0 iff the edges meet or coincide."""
    a, b = g.edges[e]
    c, d = g.edges[f]
    ra, rb = g.distances[a], g.distances[b]
    return min(ra[c], ra[d], rb[c], rb[d])


def mixed_distance(g: Graph, x: MixedElement, v: int) -> int:
    """Distance from a mixed element (vertex or edge) to a vertex."""
    if x.kind == "vertex":
        return g.distances[x.index][v]
    return vertex_edge_distance(g, v, x.index)


def mixed_elements(g: Graph) -> list[MixedElement]:
    """The mixed universe V(G) then E(G), each in index order."""
    return [vertex_element(v) for v in range(g.n)] + [edge_element(j) for j in range(g.m)]

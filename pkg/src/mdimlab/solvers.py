"""Exact solvers for metric, edge metric, and mixed metric dimension.

A vertex set W resolves a universe of elements when the distance vectors
from the elements to W are pairwise distinct.  The three dimensions use
three universes: all vertices (dim), all edges (edim), and vertices plus
edges (mdim).  Signatures are exact integer vectors; duplicate detection
hashes tuples, so collisions fall back to full tuple comparison.

The search enumerates candidate sets by increasing cardinality and, within
a cardinality, in lexicographic order, returning the first verified set.
Every minimum-cardinality witness this module returns is therefore the
lexicographically smallest one, and repeated runs are byte-identical.

Two lower bounds prune cardinalities only, never subsets:

* dim: vertices with identical neighborhoods outside the pair ("twins")
  cannot be separated by anyone else, so each twin class of size c forces
  at least c - 1 picks;
* mdim: a vertex whose neighbor dominates its closed neighborhood can only
  be told apart from that pendant-like edge by itself, so it belongs to
  every mixed resolving set.  These forced vertices also seed every
  candidate, and the enumeration only extends them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    EnumerationOverflowError,
    GraphError,
    NotABasisError,
    NoWitnessError,
    SearchBudgetExceededError,
)
from .graph import Graph, MixedElement, mixed_distance
from .transforms import SUBDIVISION, DerivedGraph

DIM = "dim"
EDIM = "edim"
MDIM = "mdim"
KINDS = (DIM, EDIM, MDIM)

DEFAULT_BUDGET = 10**8
DEFAULT_PHI_CAP = 10**7


@dataclass(frozen=True)
class Certificate:
    """A verified minimum resolving set of the given kind."""

    kind: str
    vertices: tuple[int, ...]
    value: int
    forced: tuple[int, ...] = ()


@dataclass(frozen=True)
class PhiResult:
    """Minimum footprint in G over all metric bases of the subdivision graph."""

    phi_value: int
    bases_enumerated: int
    witness_basis: tuple[int, ...]
    witness_phi_set: tuple[int, ...]


def signature(g: Graph, x: MixedElement, witness: Sequence[int]) -> tuple[int, ...]:
    """Distance vector from element x to the witness vertices, in their order."""
    if not witness:
        raise GraphError("witness set must be nonempty")
    return tuple(mixed_distance(g, x, w) for w in witness)


def _vertex_rows(g: Graph, witness: Sequence[int]) -> list[tuple[int, ...]]:
    return [g.distances[w] for w in witness]


def _edge_rows(g: Graph, witness: Sequence[int]) -> list[tuple[int, ...]]:
    rows = []
    for w in witness:
        dw = g.distances[w]
        rows.append(tuple(min(dw[a], dw[b]) for a, b in g.edges))
    return rows


def _columns_distinct(rows: list[tuple[int, ...]]) -> bool:
    seen = set()
    add = seen.add
    for column in zip(*rows):
        if column in seen:
            return False
        add(column)
    return True


def _check_witness(g: Graph, witness: Sequence[int]) -> list[int]:
    ws = sorted(set(witness))
    if not ws:
        raise GraphError("witness set must be nonempty")
    if ws[0] < 0 or ws[-1] >= g.n:
        raise GraphError("witness contains a vertex outside 0..n-1")
    return ws


def is_resolving(g: Graph, witness: Iterable[int]) -> bool:
    """True iff every pair of vertices gets distinct distance vectors to W."""
    return _columns_distinct(_vertex_rows(g, _check_witness(g, witness)))


def is_edge_resolving(g: Graph, witness: Iterable[int]) -> bool:
    """True iff every pair of edges gets distinct distance vectors to W."""
    return _columns_distinct(_edge_rows(g, _check_witness(g, witness)))


def is_mixed_resolving(g: Graph, witness: Iterable[int]) -> bool:
    """True iff all vertices and edges get pairwise distinct vectors to W."""
    ws = _check_witness(g, witness)
    rows = [v + e for v, e in zip(_vertex_rows(g, ws), _edge_rows(g, ws))]
    return _columns_distinct(rows)


def forced_vertices_mdim(g: Graph) -> tuple[int, ...]:
    """Vertices with a maximal neighbor; they lie in every mixed resolving set."""
    closed = [frozenset(g.adjacency[v]) | {v} for v in range(g.n)]
    forced = []
    for v in range(g.n):
        if any(closed[v] <= closed[u] for u in g.adjacency[v]):
            forced.append(v)
    return tuple(forced)


def _twin_lower_bound(g: Graph) -> int:
    """Sum of (class size - 1) over twin classes; a valid floor for dim."""
    open_nb = [set(g.adjacency[v]) for v in range(g.n)]
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in combinations(range(g.n), 2):
        if open_nb[u] - {v} == open_nb[v] - {u}:
            parent[find(u)] = find(v)
    sizes: dict[int, int] = {}
    for v in range(g.n):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return sum(c - 1 for c in sizes.values())


def _universe_rows(g: Graph, kind: str) -> list[tuple[int, ...]]:
    """Per-vertex distance rows over the kind's element universe."""
    if kind == DIM:
        return _vertex_rows(g, range(g.n))
    if kind == EDIM:
        return _edge_rows(g, range(g.n))
    if kind == MDIM:
        return [v + e for v, e in zip(_vertex_rows(g, range(g.n)), _edge_rows(g, range(g.n)))]
    raise GraphError(f"unknown kind {kind!r}")


def solve_dimension(g: Graph, kind: str, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Minimum resolving set of the given kind, lexicographically smallest.

    Budget counts subset-verification calls across the whole search and
    raises SearchBudgetExceededError when exhausted.
    """
    if kind not in KINDS:
        raise GraphError(f"unknown kind {kind!r}")
    rows = _universe_rows(g, kind)

    forced: tuple[int, ...] = ()
    start = 1
    if kind == MDIM:
        forced = forced_vertices_mdim(g)
        start = max(1, len(forced))
    elif kind == DIM:
        start = max(1, _twin_lower_bound(g))

    forced_rows = [rows[v] for v in forced]
    rest = [v for v in range(g.n) if v not in set(forced)]
    checked = 0
    for k in range(start, g.n + 1):
        extra = k - len(forced)
        if extra < 0 or extra > len(rest):
            continue
        for combo in combinations(rest, extra):
            checked += 1
            if checked > budget:
                raise SearchBudgetExceededError(checked, budget)
            if _columns_distinct(forced_rows + [rows[v] for v in combo]):
                witness = tuple(sorted(forced + combo))
                return Certificate(kind=kind, vertices=witness, value=k, forced=forced)
    raise NoWitnessError(f"no {kind} resolving set found up to k = n; input outside supported class")


def phi_set(sg: DerivedGraph, vertex_set: Iterable[int]) -> tuple[int, ...]:
    """Original vertices in the set, plus both endpoints of every split edge in it."""
    base_n = sg.base_n
    out = set()
    for v in vertex_set:
        tag, idx = sg.provenance[v]
        if tag == SUBDIVISION:
            # in S(G) the neighbors of a split vertex are its base edge's endpoints
            out.update(sg.graph.adjacency[v])
        else:
            out.add(idx)
    if any(v >= base_n for v in out):
        raise GraphError("split vertex adjacent to a non-original vertex; not a subdivision graph")
    return tuple(sorted(out))


def phi_of_basis(sg: DerivedGraph, basis: Iterable[int]) -> tuple[int, ...]:
    """phi of a resolving set of the subdivision graph; NotABasisError otherwise."""
    bs = tuple(sorted(set(basis)))
    if not is_resolving(sg.graph, bs):
        raise NotABasisError(f"{bs} is not a resolving set of the subdivision graph")
    return phi_set(sg, bs)


def phi_of_graph(
    g: Graph,
    cap: int = DEFAULT_PHI_CAP,
    budget: int = DEFAULT_BUDGET,
) -> PhiResult:
    """Enumerate every metric basis of S(G) and minimize the phi footprint.

    Raises EnumerationOverflowError when the count of candidate k-subsets
    of V(S(G)) exceeds the cap, with k = dim(S(G)).
    """
    from .transforms import subdivision

    sg = subdivision(g)
    k = solve_dimension(sg.graph, DIM, budget=budget).value
    total = math.comb(sg.graph.n, k)
    if total > cap:
        raise EnumerationOverflowError(total, cap)

    rows = _vertex_rows(sg.graph, range(sg.graph.n))
    bases = 0
    best_size: int | None = None
    best_basis: tuple[int, ...] = ()
    best_phi: tuple[int, ...] = ()
    for combo in combinations(range(sg.graph.n), k):
        if _columns_distinct([rows[v] for v in combo]):
            bases += 1
            phi = phi_set(sg, combo)
            if best_size is None or len(phi) < best_size:
                best_size = len(phi)
                best_basis = combo
                best_phi = phi
    if best_size is None:
        raise NoWitnessError("no metric basis found at the solved cardinality")
    return PhiResult(
        phi_value=best_size,
        bases_enumerated=bases,
        witness_basis=best_basis,
        witness_phi_set=best_phi,
    )

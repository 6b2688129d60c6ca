"""Immutable graph type with bitmask vertex sets.

Vertices are dense integer indices 0..n-1.  Throughout the package a
"vertex set" is a plain Python int used as a bitmask: bit v is set iff
vertex v is a member.  Ints give O(1) union/intersection/complement and
hardware popcounts, which the forcing engine and the exact solver lean
on heavily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

VertexSet = int  # bitmask alias used in signatures for readability


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Build a bitmask from an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the vertex indices of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: VertexSet) -> list[int]:
    """Sorted list of the vertices in a bitmask."""
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``adj[v]`` is the open neighborhood of v as a bitmask.  Instances are
    immutable value types: hashable, safe to share between workers, and
    every derived quantity is a pure function of the fields.
    """

    n: int
    adj: tuple[int, ...]
    degrees: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "degrees", tuple(row.bit_count() for row in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- basic views ---------------------------------------------------

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def closed_neighborhood(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    # -- degree statistics ---------------------------------------------

    def max_degree(self) -> int:
        return max(self.degrees)

    def min_degree(self) -> int:
        return min(self.degrees)

    def is_regular(self) -> int | None:
        """The common degree r if the graph is regular, else None."""
        r = self.degrees[0]
        return r if all(d == r for d in self.degrees) else None

    # -- derived graphs -------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, mask: VertexSet) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask`` plus the old labels of its vertices."""
        keep = bit_list(mask)
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(keep)}
        rows = [mask_of(index[u] for u in bits(self.adj[v] & mask)) for v in keep]
        return Graph(len(keep), tuple(rows)), keep


def reachable(g: Graph, start: int) -> VertexSet:
    """Vertices reachable from ``start`` (bitmask), by fixpoint expansion."""
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g, 0) == g.full_mask


def components(g: Graph) -> list[VertexSet]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    comps = []
    remaining = g.full_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reachable(g, start)
        comps.append(comp)
        remaining &= ~comp
    return comps


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    Runs a BFS from every vertex; any non-tree edge between explored
    vertices closes a walk of length dist[u] + dist[w] + 1 through the
    root, which always contains a cycle at most that long.  Rooting at a
    vertex of a shortest cycle makes the estimate exact, so the minimum
    over all roots is the girth.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                if best is not None and 2 * dist[v] >= best:
                    continue
                for u in bits(g.adj[v]):
                    if dist[u] == -1:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif parent[v] != u and parent[u] != v:
                        cand = dist[v] + dist[u] + 1
                        if best is None or cand < best:
                            best = cand
            queue = nxt
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle as a vertex list, or None for forests.

    Deterministic: among shortest cycles the one found from the smallest
    root is returned.
    """
    target = girth(g)
    if target is None:
        return None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                if 2 * dist[v] >= target:
                    continue
                for u in bits(g.adj[v]):
                    if dist[u] == -1:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif parent[v] != u and parent[u] != v:
                        if dist[v] + dist[u] + 1 == target:
                            left = _root_path(parent, v)
                            right = _root_path(parent, u)
                            shared = set(left) & set(right)
                            if len(shared) == 1:  # meet only at the root
                                return left[::-1] + right[:-1]
            queue = nxt
    raise AssertionError("shortest cycle not reconstructed")  # pragma: no cover


def _root_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path

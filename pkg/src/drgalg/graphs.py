"""Undirected simple graphs on dense 0-based vertex ids.

Graphs are immutable after construction.  Distances are exact small
integers computed by BFS; unreachable pairs are marked with None rather
than a numeric sentinel, so they can never leak into arithmetic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence, Tuple

from .errors import BadVertexList, DisconnectedGraph, ParseError

Edge = Tuple[int, int]


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Edges are stored as a sorted tuple of (u, v) pairs with u < v, and
    adjacency lists are prebuilt for O(deg) neighbor iteration in
    deterministic (increasing) vertex order.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.n = n
        self.edges = tuple(normalized)
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


class DistanceMatrix:
    """All-pairs shortest-path distances; None marks unreachable pairs."""

    __slots__ = ("n", "dist")

    def __init__(self, n: int, dist: Sequence[Sequence[Optional[int]]]):
        self.n = n
        self.dist = tuple(tuple(row) for row in dist)

    def get(self, x: int, y: int) -> Optional[int]:
        return self.dist[x][y]

    def is_connected(self) -> bool:
        return all(d is not None for row in self.dist for d in row)

    def max_finite(self) -> int:
        """Largest finite distance (0 for a graph with no pairs)."""
        best = 0
        for row in self.dist:
            for d in row:
                if d is not None and d > best:
                    best = d
        return best


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; exact distances, None where unreachable."""
    n = g.n
    rows = []
    for src in range(n):
        dist = [None] * n
        dist[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            for y in g.neighbors(x):
                if dist[y] is None:
                    dist[y] = dx + 1
                    queue.append(y)
        rows.append(dist)
    return DistanceMatrix(n, rows)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    dist = [None] * g.n
    dist[0] = 0
    queue = deque([0])
    seen = 1
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] is None:
                dist[y] = dist[x] + 1
                seen += 1
                queue.append(y)
    return seen == g.n


def diameter(g: Graph) -> int:
    """Maximum distance over all vertex pairs of a connected graph."""
    dm = all_pairs_distances(g)
    if not dm.is_connected():
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")
    return dm.max_finite()


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph relabeled 0..k-1 following the given list order."""
    index = {}
    for pos, v in enumerate(vertices):
        if not (0 <= v < g.n):
            raise BadVertexList(f"vertex {v} out of range [0, {g.n})")
        if v in index:
            raise BadVertexList(f"duplicate vertex {v}")
        index[v] = pos
    edges = []
    for u, v in g.edges:
        if u in index and v in index:
            edges.append((index[u], index[v]))
    return Graph(len(index), edges)


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header `n <count>`, then `u v` lines."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; `#` starts a comment line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}")
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint")
        if not u < v:
            raise ParseError(f"line {lineno}: edges must satisfy u < v")
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc))

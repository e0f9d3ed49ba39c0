"""Deterministic constructions of the catalog graph families.

Every generator commits to one canonical labeling so that edge sets,
distance matrices, and downstream reports are reproducible bit for bit.
Validity is established by isomorphism-invariant checks in the test
suite (vertex counts, regularity, intersection arrays), not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import BadParameter
from .graphs import Graph, all_pairs_distances, induced_subgraph

FAMILIES = (
    "crown",
    "icosahedron",
    "heawood",
    "petersen_line",
    "hamming33",
    "sylvester",
    "hoffman_singleton",
    "hs_second_subconstituent",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its optional size parameter (crown only)."""

    family: str
    parameter: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParameter(f"unknown family {self.family!r}")
        if self.family == "crown":
            if self.parameter is None:
                raise BadParameter("crown requires a size parameter n >= 3")
            if self.parameter < 3:
                raise BadParameter(f"crown size must be >= 3, got {self.parameter}")
        elif self.parameter is not None:
            raise BadParameter(f"{self.family} takes no parameter")


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by the spec, with its canonical labeling."""
    if spec.family == "crown":
        return crown(spec.parameter)
    return _BUILDERS[spec.family]()


def crown(n: int) -> Graph:
    """Complete bipartite K_{n,n} minus the identity perfect matching.

    Vertices 0..n-1 are the left part, n..2n-1 the right part; (i, n+j)
    is an edge iff i != j, so the removed matching pairs i with n+i.
    """
    if n < 3:
        raise BadParameter(f"crown size must be >= 3, got {n}")
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    return Graph(2 * n, edges)


def icosahedron() -> Graph:
    """Icosahedron as a pentagonal antiprism (rings 1-5 and 6-10) plus
    apexes 0 and 11."""
    edges = [(0, i) for i in range(1, 6)]
    edges += [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    edges += [(6, 7), (7, 8), (8, 9), (9, 10), (6, 10)]
    edges += [(11, i) for i in range(6, 11)]
    # antiprism band: upper ring vertex 1+j meets lower ring 6+j and 6+(j-1 mod 5)
    for j in range(5):
        edges.append((1 + j, 6 + j))
        edges.append((1 + j, 6 + (j - 1) % 5))
    return Graph(12, edges)


def heawood() -> Graph:
    """14-cycle 0..13 plus chords i ~ i+5 (mod 14) for even i."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, edges)


def petersen() -> Graph:
    """Kneser graph on the 2-subsets of {0..4}: vertices are the ten
    pairs in lexicographic order, adjacent iff disjoint."""
    pairs = list(combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for p, q in combinations(pairs, 2):
        if not set(p) & set(q):
            edges.append((index[p], index[q]))
    return Graph(10, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph: vertices are g's edges in lexicographic order,
    adjacent iff they share an endpoint."""
    edges = []
    for a, b in combinations(range(g.edge_count), 2):
        if set(g.edges[a]) & set(g.edges[b]):
            edges.append((a, b))
    return Graph(g.edge_count, edges)


def petersen_line() -> Graph:
    return line_graph(petersen())


def hamming33() -> Graph:
    """H(3,3): vertices are length-3 base-3 strings read as integers
    0..26, adjacent iff they differ in exactly one coordinate."""
    def digits(x):
        return (x // 9, (x // 3) % 3, x % 3)

    edges = []
    for x in range(27):
        for y in range(x + 1, 27):
            dx, dy = digits(x), digits(y)
            if sum(a != b for a, b in zip(dx, dy)) == 1:
                edges.append((x, y))
    return Graph(27, edges)


def hoffman_singleton() -> Graph:
    """50-vertex 7-regular girth-5 graph from the pentagon/pentagram
    construction.

    Pentagons P_h (h = 0..4) occupy ids 5h+j with edges j ~ j+-1 (mod 5);
    pentagrams Q_i occupy ids 25+5i+j with edges j ~ j+-2 (mod 5); cross
    edges join (P,h,j) to (Q,i, h*i + j mod 5).
    """
    def p(h, j):
        return 5 * h + j

    def q(i, j):
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append(tuple(sorted((p(h, j), p(h, (j + 1) % 5)))))
            edges.append(tuple(sorted((q(h, j), q(h, (j + 2) % 5)))))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((p(h, j), q(i, (h * i + j) % 5)))
    return Graph(50, edges)


def second_subconstituent(g: Graph, v: int) -> Graph:
    """Induced subgraph on the vertices at distance exactly 2 from v,
    kept in increasing original-id order."""
    dm = all_pairs_distances(g)
    vertices = [x for x in range(g.n) if dm.get(v, x) == 2]
    return induced_subgraph(g, vertices)


def hs_second_subconstituent() -> Graph:
    """Second subconstituent of Hoffman-Singleton at vertex 0 (42 points)."""
    return second_subconstituent(hoffman_singleton(), 0)


def sylvester() -> Graph:
    """Induced subgraph of Hoffman-Singleton on the 36 vertices at
    distance >= 2 from both endpoints of its least edge."""
    hs = hoffman_singleton()
    u, v = hs.edges[0]
    dm = all_pairs_distances(hs)
    vertices = [
        x for x in range(hs.n)
        if dm.get(u, x) >= 2 and dm.get(v, x) >= 2
    ]
    return induced_subgraph(hs, vertices)


_BUILDERS = {
    "icosahedron": icosahedron,
    "heawood": heawood,
    "petersen_line": petersen_line,
    "hamming33": hamming33,
    "sylvester": sylvester,
    "hoffman_singleton": hoffman_singleton,
    "hs_second_subconstituent": hs_second_subconstituent,
}

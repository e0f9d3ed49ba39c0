"""Distance colorings, brute-force intersection numbers, and arrays.

The ground truth here is literal counting: for a base pair (x, y) of
color h, walk every point z and tally the leg-color pair
(color(x,z), color(z,y)).  A coloring is uniform (an association
scheme) when these tallies agree for every base pair of each color.
All arithmetic is exact; divisions go through Fraction and are asserted
integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    DisconnectedGraph,
    InconsistentTensor,
    NonIntegralLayer,
    ParseError,
)
from .graphs import Graph, all_pairs_distances

# Above this point count the O(n^3) sweeps switch to exact integer
# matrix products (counts < 2^53, so float64 matmul is exact).
NUMPY_MIN_N = 96


class ColoredCompleteGraph:
    """Symmetric edge coloring of K_n: identity color 0 on the diagonal,
    diversity colors 1..m off it, every diversity color nonempty."""

    __slots__ = ("n", "m", "color")

    def __init__(self, n: int, m: int, color: Sequence[Sequence[int]]):
        if len(color) != n or any(len(row) != n for row in color):
            raise ValueError(f"color matrix must be {n}x{n}")
        seen = [False] * (m + 1)
        for x in range(n):
            if color[x][x] != 0:
                raise ValueError(f"diagonal entry ({x},{x}) must be color 0")
            for y in range(x + 1, n):
                c = color[x][y]
                if c != color[y][x]:
                    raise ValueError(f"color matrix not symmetric at ({x},{y})")
                if not (1 <= c <= m):
                    raise ValueError(f"color {c} at ({x},{y}) outside 1..{m}")
                seen[c] = True
        for c in range(1, m + 1):
            if not seen[c]:
                raise ValueError(f"color {c} never occurs")
        self.n = n
        self.m = m
        self.color = tuple(tuple(row) for row in color)

    def recolored(self, x: int, y: int, c: int) -> "ColoredCompleteGraph":
        """Copy with the pair {x, y} recolored to c."""
        rows = [list(row) for row in self.color]
        rows[x][y] = c
        rows[y][x] = c
        return ColoredCompleteGraph(self.n, self.m, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredCompleteGraph)
            and self.n == other.n
            and self.m == other.m
            and self.color == other.color
        )

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.color))

    def __repr__(self) -> str:
        return f"ColoredCompleteGraph(n={self.n}, m={self.m})"


def distance_coloring(g: Graph) -> ColoredCompleteGraph:
    """Color each pair by its graph distance; m = diameter."""
    dm = all_pairs_distances(g)
    if not dm.is_connected():
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")
    return ColoredCompleteGraph(g.n, dm.max_finite(), dm.dist)


def adjacency_coloring(g: Graph) -> ColoredCompleteGraph:
    """Two-color edge/non-edge view of a graph (one color if K_n or
    empty).  The color-preserving automorphisms are exactly Aut(g)."""
    n = g.n
    complete = g.edge_count == n * (n - 1) // 2
    empty = g.edge_count == 0
    m = 1 if (complete or empty or n < 2) else 2
    rows = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            c = 1 if (g.has_edge(x, y) or empty) else 2
            rows[x][y] = c
            rows[y][x] = c
    return ColoredCompleteGraph(n, m if n >= 2 else 0, rows)


@dataclass(frozen=True)
class IntersectionTensor:
    """Exact counts p[h][i][j] plus layer sizes k[i], indices 0..d."""

    d: int
    p: Tuple[Tuple[Tuple[int, ...], ...], ...]
    k: Tuple[int, ...]

    def entry(self, h: int, i: int, j: int) -> int:
        return self.p[h][i][j]

    def validate(self, n: Optional[int] = None) -> None:
        """Check the structural identities; raise InconsistentTensor."""
        w = self.d + 1
        if len(self.p) != w or len(self.k) != w:
            raise InconsistentTensor("tensor has wrong shape")
        if self.k[0] != 1:
            raise InconsistentTensor(f"k[0] = {self.k[0]}, expected 1")
        if n is not None and sum(self.k) != n:
            raise InconsistentTensor(f"sum k = {sum(self.k)}, expected {n}")
        for h in range(w):
            for i in range(w):
                for j in range(w):
                    if self.p[h][i][j] != self.p[h][j][i]:
                        raise InconsistentTensor(
                            f"p[{h}][{i}][{j}] != p[{h}][{j}][{i}]"
                        )
                row = sum(self.p[h][i])
                if row != self.k[i]:
                    raise InconsistentTensor(
                        f"row sum p[{h}][{i}][.] = {row}, expected k[{i}] = {self.k[i]}"
                    )
        if not check_khp_identity(self):
            raise InconsistentTensor("k_h * p_ij^h = k_i * p_hj^i fails")

    def to_json(self) -> dict:
        return {"k": list(self.k), "p": [[list(r) for r in pl] for pl in self.p]}

    @classmethod
    def from_json(cls, data: dict) -> "IntersectionTensor":
        k = tuple(int(v) for v in data["k"])
        p = tuple(
            tuple(tuple(int(v) for v in row) for row in plane)
            for plane in data["p"]
        )
        return cls(len(k) - 1, p, k)


@dataclass(frozen=True)
class NonUniformReport:
    """First constancy violation found, in deterministic scan order.

    triple is (h, i, j); base_a/base_b are ordered base pairs of color h
    whose counts of {z : color(x,z)=i, color(z,y)=j} differ.
    """

    triple: Tuple[int, int, int]
    base_a: Tuple[int, int]
    count_a: int
    base_b: Tuple[int, int]
    count_b: int

    def to_json(self) -> dict:
        return {
            "triple": list(self.triple),
            "base_pairs": [list(self.base_a), list(self.base_b)],
            "counts": [self.count_a, self.count_b],
        }


CountResult = Union[IntersectionTensor, NonUniformReport]


def count_tensor(cg: ColoredCompleteGraph) -> CountResult:
    """Brute-force intersection counts over every base pair.

    Scans ordered pairs (x, y) in row-major order (diagonal included,
    giving the layer sizes at h = 0).  Returns the tensor when every
    per-(h,i,j) count is constant, otherwise the first violation.
    """
    if cg.n >= NUMPY_MIN_N:
        tensor = _count_tensor_matrix(cg)
        if tensor is not None:
            return tensor
        # non-uniform: rerun the sweep to produce the canonical report
    return _count_tensor_sweep(cg)


def _count_tensor_sweep(cg: ColoredCompleteGraph) -> CountResult:
    n, m = cg.n, cg.m
    w = m + 1
    color = [list(row) for row in cg.color]
    baseline: List[Optional[List[int]]] = [None] * w
    base_pair: List[Optional[Tuple[int, int]]] = [None] * w
    for x in range(n):
        cx = color[x]
        for y in range(n):
            cy = color[y]
            h = cx[y]
            counts = [0] * (w * w)
            for z in range(n):
                counts[cx[z] * w + cy[z]] += 1
            ref = baseline[h]
            if ref is None:
                baseline[h] = counts
                base_pair[h] = (x, y)
            elif counts != ref:
                idx = next(t for t in range(w * w) if counts[t] != ref[t])
                i, j = divmod(idx, w)
                return NonUniformReport(
                    (h, i, j), base_pair[h], ref[idx], (x, y), counts[idx]
                )
    p = tuple(
        tuple(tuple(baseline[h][i * w + j] for j in range(w)) for i in range(w))
        for h in range(w)
    )
    k = tuple(p[0][i][i] for i in range(w))
    tensor = IntersectionTensor(m, p, k)
    tensor.validate(n)
    return tensor


def _count_tensor_matrix(cg: ColoredCompleteGraph) -> Optional[IntersectionTensor]:
    """Exact matrix-product counts; None when the coloring is not uniform."""
    n, m = cg.n, cg.m
    w = m + 1
    C = np.array(cg.color, dtype=np.int64)
    masks = [C == h for h in range(w)]
    ind = [mask.astype(np.float64) for mask in masks]
    p = [[[0] * w for _ in range(w)] for _ in range(w)]
    for i in range(w):
        for j in range(i, w):
            prod = ind[i] @ ind[j]
            for h in range(w):
                vals = prod[masks[h]]
                vmin = vals.min()
                if vmin != vals.max():
                    return None
                p[h][i][j] = p[h][j][i] = int(vmin)
    pt = tuple(tuple(tuple(row) for row in plane) for plane in p)
    k = tuple(pt[0][i][i] for i in range(w))
    tensor = IntersectionTensor(m, pt, k)
    tensor.validate(n)
    return tensor


def is_distance_regular(g: Graph) -> Tuple[bool, Optional[IntersectionTensor]]:
    """Whether the distance coloring is uniform; tensor when it is."""
    result = count_tensor(distance_coloring(g))
    if isinstance(result, IntersectionTensor):
        return True, result
    return False, None


class IntersectionArray:
    """The array {b_0..b_{d-1}; c_1..c_d} with derived a_i.

    Conventions: c_0 = 0, b_d = 0, a_i = b_0 - b_i - c_i.  Construction
    checks positivity of the b's and c's, c_1 = 1, and a_i >= 0; layer
    integrality is the business of layer_sizes.
    """

    __slots__ = ("d", "b", "c")

    def __init__(self, b: Sequence[int], c: Sequence[int]):
        if len(b) != len(c) or not b:
            raise ValueError("need d entries in both b and c")
        self.d = len(b)
        self.b = tuple(int(v) for v in b)
        self.c = tuple(int(v) for v in c)
        if any(v < 1 for v in self.b):
            raise ValueError(f"all b_i must be >= 1: {self.b}")
        if any(v < 1 for v in self.c):
            raise ValueError(f"all c_i must be >= 1: {self.c}")
        if self.c[0] != 1:
            raise ValueError(f"c_1 must be 1, got {self.c[0]}")
        for i in range(self.d + 1):
            if self.a(i) < 0:
                raise ValueError(f"a_{i} = {self.a(i)} is negative")

    def bi(self, i: int) -> int:
        """b_i with the convention b_d = 0."""
        return self.b[i] if i < self.d else 0

    def ci(self, i: int) -> int:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    def a(self, i: int) -> int:
        return self.b[0] - self.bi(i) - self.ci(i)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntersectionArray)
            and self.b == other.b
            and self.c == other.c
        )

    def __hash__(self) -> int:
        return hash((self.b, self.c))

    def __repr__(self) -> str:
        return f"IntersectionArray({format_array(self)!r})"


def format_array(arr: IntersectionArray) -> str:
    return ",".join(map(str, arr.b)) + ";" + ",".join(map(str, arr.c))


def parse_array(text: str) -> IntersectionArray:
    """Parse `b0,b1,...;c1,c2,...` (braces and spaces tolerated)."""
    s = text.strip().strip("{}").replace(" ", "")
    halves = s.split(";")
    if len(halves) != 2:
        raise ParseError(f"expected one ';' in array string {text!r}")
    try:
        b = [int(v) for v in halves[0].split(",") if v]
        c = [int(v) for v in halves[1].split(",") if v]
    except ValueError:
        raise ParseError(f"non-integer entry in array string {text!r}")
    try:
        return IntersectionArray(b, c)
    except ValueError as exc:
        raise ParseError(f"invalid intersection array {text!r}: {exc}")


def extract_array(t: IntersectionTensor) -> IntersectionArray:
    """Read b_i, c_i off a distance-coloring tensor and validate the
    a_i = b_0 - b_i - c_i identity."""
    d = t.d
    b = [t.p[i][1][i + 1] for i in range(d)]
    c = [t.p[i][1][i - 1] for i in range(1, d + 1)]
    try:
        arr = IntersectionArray(b, c)
    except ValueError as exc:
        raise InconsistentTensor(f"tensor does not yield a valid array: {exc}")
    for i in range(d + 1):
        if t.p[i][1][i] != arr.a(i):
            raise InconsistentTensor(
                f"a_{i} from tensor is {t.p[i][1][i]}, "
                f"but b_0 - b_{i} - c_{i} = {arr.a(i)}"
            )
    return arr


def layer_sizes(arr: IntersectionArray) -> List[int]:
    """k_0 = 1, k_1 = b_0, k_{i+1} = k_i b_i / c_{i+1}; divisions exact."""
    k = [1]
    for i in range(arr.d):
        nxt = Fraction(k[-1] * arr.b[i], arr.ci(i + 1))
        if nxt.denominator != 1:
            raise NonIntegralLayer(
                f"k_{i + 1} = k_{i} * b_{i} / c_{i + 1} = {nxt} is not integral"
            )
        k.append(int(nxt))
    return k


def check_khp_identity(t: IntersectionTensor) -> bool:
    """k_h * p_ij^h == k_i * p_hj^i for all h, i, j."""
    w = t.d + 1
    for h in range(w):
        for i in range(w):
            for j in range(w):
                if t.k[h] * t.p[h][i][j] != t.k[i] * t.p[i][h][j]:
                    return False
    return True


def format_coloring(cg: ColoredCompleteGraph) -> str:
    """Coloring text: header `n <count> colors <m>`, one `u v c` line
    per unordered pair u < v."""
    lines = [f"n {cg.n} colors {cg.m}"]
    for u in range(cg.n):
        for v in range(u + 1, cg.n):
            lines.append(f"{u} {v} {cg.color[u][v]}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> ColoredCompleteGraph:
    """Parse the coloring text format; every pair u < v must appear."""
    n = None
    m = None
    rows = None
    filled = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 4 or parts[0] != "n" or parts[2] != "colors":
                raise ParseError(
                    f"line {lineno}: expected header 'n <count> colors <m>'"
                )
            try:
                n, m = int(parts[1]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: bad header numbers")
            rows = [[0] * n for _ in range(n)]
            continue
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'u v c'")
        try:
            u, v, c = (int(z) for z in parts)
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field")
        if not (0 <= u < v < n):
            raise ParseError(f"line {lineno}: need 0 <= u < v < {n}")
        if rows[u][v] != 0:
            raise ParseError(f"line {lineno}: pair ({u},{v}) listed twice")
        rows[u][v] = c
        rows[v][u] = c
        filled += 1
    if n is None:
        raise ParseError("missing 'n <count> colors <m>' header")
    if filled != n * (n - 1) // 2:
        raise ParseError(
            f"expected {n * (n - 1) // 2} pair lines, got {filled}"
        )
    try:
        return ColoredCompleteGraph(n, m, rows)
    except ValueError as exc:
        raise ParseError(str(exc))

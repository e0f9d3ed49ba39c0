"""Cycle catalog, representation verification, and structure checks.

verify_representation implements the bare representation condition:
for each unordered diversity triple, either every base pair of each of
its colors extends to a triangle of that type (mandatory) or none does
anywhere (forbidden).  It checks existence per base pair directly, so
it applies to arbitrary colorings, not just association schemes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np

from .diam3 import CYCLE_TYPES, CycleTable, cycle_colors, cycle_name
from .errors import ColorCountMismatch
from .scheme import ColoredCompleteGraph, NUMPY_MIN_N

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class RACatalogEntry:
    name: str
    mandatory: FrozenSet[str]


def _entry(name, *cycles):
    return RACatalogEntry(name, frozenset(cycles))


# The eight cataloged four-atom algebras and their mandatory diversity
# cycles; everything not listed for an entry is forbidden there.
CATALOG = (
    _entry("26_65", "aaa", "abb", "abc"),
    _entry("27_65", "aaa", "bbb", "abb", "baa", "abc"),
    _entry("28_65", "aaa", "abb", "acc", "abc"),
    _entry("30_65", "aaa", "ccc", "abb", "baa", "caa", "abc"),
    _entry("31_65", "aaa", "bbb", "ccc", "abb", "baa", "caa", "abc"),
    _entry("57_65", "aaa", "bbb", "abb", "baa", "acc", "caa", "bcc", "abc"),
    _entry("59_65", "aaa", "ccc", "abb", "baa", "acc", "caa", "bcc", "abc"),
    _entry("61_65", "aaa", "bbb", "ccc", "abb", "baa", "acc", "caa", "bcc", "abc"),
)

CATALOG_BY_NAME = {e.name: e for e in CATALOG}


@dataclass(frozen=True)
class Violation:
    kind: str  # "missing-mandatory" | "forbidden-present"
    triple: Triple  # (base color h, leg colors i <= j)
    base: Tuple[int, int]
    apex: Optional[int] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "triple": list(self.triple), "base": list(self.base)}
        if self.apex is not None:
            out["apex"] = self.apex
        return out


@dataclass
class RepReport:
    status: str  # "pass" | "fail"
    violations: List[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"status": self.status, "violations": [v.to_json() for v in self.violations]}
        if self.truncated:
            out["truncated"] = True
        return out


def _normalize_cycles(cg, mandatory) -> FrozenSet[Triple]:
    """Mandatory cycles as sorted color triples over 1..m."""
    if isinstance(mandatory, CycleTable):
        if cg.m != 3:
            raise ColorCountMismatch(
                f"cycle table is over 3 diversity atoms, coloring has {cg.m}"
            )
        return frozenset(cycle_colors(t) for t in mandatory.mandatory)
    triples = set()
    for item in mandatory:
        if isinstance(item, str):
            if all(ch in "abc" for ch in item) and len(item) == 3:
                if cg.m != 3:
                    raise ColorCountMismatch(
                        f"letter cycles need 3 diversity colors, coloring has {cg.m}"
                    )
                triple = cycle_colors(cycle_name(item))
            else:
                triple = tuple(sorted(int(ch) for ch in item))
        else:
            triple = tuple(sorted(int(v) for v in item))
        if len(triple) != 3 or not all(1 <= c <= cg.m for c in triple):
            raise ValueError(f"bad cycle {item!r} for {cg.m} diversity colors")
        triples.add(triple)
    return frozenset(triples)


def all_cycle_triples(m: int) -> List[Triple]:
    """Every unordered diversity triple over colors 1..m, sorted."""
    return list(combinations_with_replacement(range(1, m + 1), 3))


def verify_representation(
    cg: ColoredCompleteGraph,
    mandatory: Union[CycleTable, Sequence],
    cap: int = 10,
) -> RepReport:
    """Check the mandatory/forbidden triangle pattern of a coloring.

    Scan order is deterministic: triple types ascending, base color
    rotations ascending within a type, base pairs (x < y) row-major.
    At most cap violations are collected.
    """
    mand = _normalize_cycles(cg, mandatory)
    types = all_cycle_triples(cg.m)
    unknown = mand - set(types)
    if unknown:
        raise ValueError(f"cycles outside the type universe: {sorted(unknown)}")

    if cg.n >= NUMPY_MIN_N:
        presence = _presence_matrix(cg)
        def has_apex(x, y, legs):
            return bool(presence[legs][x, y])
        def apex_of(x, y, legs):
            i, j = legs
            row = cg.color[x]
            col = cg.color[y]
            for z in range(cg.n):
                if z == x or z == y:
                    continue
                cz = (row[z], col[z])
                if cz == (i, j) or cz == (j, i):
                    return z
            return None
    else:
        table = _presence_table(cg)
        def has_apex(x, y, legs):
            return legs in table[(x, y)]
        def apex_of(x, y, legs):
            return table[(x, y)].get(legs)

    pairs_by_color: Dict[int, List[Tuple[int, int]]] = {c: [] for c in range(1, cg.m + 1)}
    for x in range(cg.n):
        row = cg.color[x]
        for y in range(x + 1, cg.n):
            pairs_by_color[row[y]].append((x, y))

    violations: List[Violation] = []
    truncated = False
    for t in types:
        is_mandatory = t in mand
        for h in sorted(set(t)):
            legs = list(t)
            legs.remove(h)
            legs = tuple(legs)
            for (x, y) in pairs_by_color[h]:
                found = has_apex(x, y, legs)
                if found and not is_mandatory:
                    violations.append(
                        Violation("forbidden-present", (h,) + legs, (x, y), apex_of(x, y, legs))
                    )
                elif is_mandatory and not found:
                    violations.append(
                        Violation("missing-mandatory", (h,) + legs, (x, y))
                    )
                if len(violations) >= cap:
                    truncated = True
                    break
            if truncated:
                break
        if truncated:
            break
    status = "pass" if not violations else "fail"
    return RepReport(status, violations, truncated)


def _presence_table(cg):
    """Per unordered pair: leg-color multiset -> first completing apex."""
    n = cg.n
    color = cg.color
    table = {}
    for x in range(n):
        row = color[x]
        for y in range(x + 1, n):
            col = color[y]
            seen = {}
            for z in range(n):
                if z == x or z == y:
                    continue
                i, j = row[z], col[z]
                key = (i, j) if i <= j else (j, i)
                if key not in seen:
                    seen[key] = z
            table[(x, y)] = seen
    return table


def _presence_matrix(cg):
    """Boolean apex-existence matrices per leg multiset, via exact
    0/1 matrix products (float64 is exact at these counts)."""
    w = cg.m + 1
    C = np.array(cg.color, dtype=np.int64)
    ind = [(C == c).astype(np.float64) for c in range(w)]
    presence = {}
    for i in range(1, w):
        for j in range(i, w):
            prod = ind[i] @ ind[j]
            mat = prod > 0
            if i != j:
                mat |= mat.T
            presence[(i, j)] = mat
    return presence


@dataclass(frozen=True)
class IdentifyResult:
    name: str
    permutation: Optional[Dict[str, str]] = None

    @property
    def cataloged(self) -> bool:
        return self.name != "uncataloged"


def identify(ct: CycleTable) -> IdentifyResult:
    """Match a cycle table against the catalog, up to any permutation
    of the three diversity atoms (identity tried first)."""
    for perm in permutations("abc"):
        sigma = dict(zip("abc", perm))
        image = frozenset(
            cycle_name(sigma[ch] for ch in t) for t in ct.mandatory
        )
        for entry in CATALOG:
            if image == entry.mandatory:
                return IdentifyResult(entry.name, sigma)
    return IdentifyResult("uncataloged")


def _c_clique_census(cg: ColoredCompleteGraph, c_color: int = 3):
    """Connected components of the c-colored graph, with clique check.

    Returns (components, non_clique_pairs) where components are sorted
    vertex tuples and non_clique_pairs lists same-component pairs whose
    color is not c (first few, deterministic order).
    """
    n = cg.n
    comp = [-1] * n
    count = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        stack = [s]
        comp[s] = count
        while stack:
            x = stack.pop()
            row = cg.color[x]
            for y in range(n):
                if y != x and row[y] == c_color and comp[y] == -1:
                    comp[y] = count
                    stack.append(y)
        count += 1
    components = [[] for _ in range(count)]
    for v in range(n):
        components[comp[v]].append(v)
    non_clique = []
    for verts in components:
        for x, y in combinations(verts, 2):
            if cg.color[x][y] != c_color:
                non_clique.append((x, y))
                if len(non_clique) >= 10:
                    return [tuple(c) for c in components], non_clique
    return [tuple(c) for c in components], non_clique


@dataclass
class StructureReport3065:
    """Clique/matching structure of a 30_65-style coloring: c-edges
    partition the points into cliques, b-edges match cliques pairwise,
    everything else is a-colored."""

    clique_sizes: List[int]
    cliques_ok: bool
    matchings_ok: bool
    failed_clique_pairs: List[Tuple[int, int]]
    cross_ok: bool
    bad_cross_pairs: List[Tuple[int, int]]

    @property
    def passed(self) -> bool:
        return self.cliques_ok and self.matchings_ok and self.cross_ok

    def to_json(self) -> dict:
        return {
            "clique_sizes": self.clique_sizes,
            "cliques_ok": self.cliques_ok,
            "matchings_ok": self.matchings_ok,
            "failed_clique_pairs": [list(p) for p in self.failed_clique_pairs],
            "cross_ok": self.cross_ok,
            "bad_cross_pairs": [list(p) for p in self.bad_cross_pairs],
            "passed": self.passed,
        }


def check_3065_structure(
    cg: ColoredCompleteGraph,
    b_color: int = 1,
    a_color: int = 2,
    c_color: int = 3,
) -> StructureReport3065:
    """Verify the clique-and-matching shape: disjoint c-cliques, a
    perfect b-matching between every clique pair, a elsewhere."""
    if cg.m != 3:
        raise ColorCountMismatch(f"need 3 diversity colors, got {cg.m}")
    components, non_clique = _c_clique_census(cg, c_color)
    failed_pairs = []
    bad_cross = []
    for ai in range(len(components)):
        A = components[ai]
        for bi in range(ai + 1, len(components)):
            B = components[bi]
            matched_b = {}
            ok = len(A) == len(B)
            for x in A:
                b_hits = [y for y in B if cg.color[x][y] == b_color]
                if len(b_hits) != 1:
                    ok = False
                else:
                    matched_b[x] = b_hits[0]
            if ok:
                # the matching must hit every vertex of B exactly once
                ok = sorted(matched_b.values()) == sorted(B)
            if not ok:
                failed_pairs.append((ai, bi))
            for x in A:
                for y in B:
                    c = cg.color[x][y]
                    if c != b_color and c != a_color:
                        if len(bad_cross) < 10:
                            bad_cross.append((min(x, y), max(x, y)))
    return StructureReport3065(
        clique_sizes=sorted(len(c) for c in components),
        cliques_ok=not non_clique,
        matchings_ok=not failed_pairs,
        failed_clique_pairs=failed_pairs,
        cross_ok=not bad_cross,
        bad_cross_pairs=bad_cross,
    )


@dataclass
class MinimalityReport3165:
    """Instance-level census behind the 15-point lower bound for
    31_65: c-cliques of size >= 3, at least five of them."""

    clique_sizes: List[int]
    cliques_ok: bool
    min_size_ok: bool
    clique_count_ok: bool
    n: int

    @property
    def passed(self) -> bool:
        return (
            self.cliques_ok
            and self.min_size_ok
            and self.clique_count_ok
            and self.n >= 15
        )

    def to_json(self) -> dict:
        return {
            "clique_sizes": self.clique_sizes,
            "cliques_ok": self.cliques_ok,
            "min_size_ok": self.min_size_ok,
            "clique_count_ok": self.clique_count_ok,
            "n": self.n,
            "passed": self.passed,
        }


def check_3165_minimality_properties(
    cg: ColoredCompleteGraph, c_color: int = 3
) -> MinimalityReport3165:
    if cg.m != 3:
        raise ColorCountMismatch(f"need 3 diversity colors, got {cg.m}")
    components, non_clique = _c_clique_census(cg, c_color)
    sizes = sorted(len(c) for c in components)
    return MinimalityReport3165(
        clique_sizes=sizes,
        cliques_ok=not non_clique,
        min_size_ok=all(s >= 3 for s in sizes),
        clique_count_ok=len(sizes) >= 5,
        n=cg.n,
    )

"""Automorphism groups, orbitals, and the algebraicity decision.

The search finds a generating set for the full color-preserving
automorphism group of a colored complete graph by backtracking with
equitable-partition refinement.  Vertex classes are renumbered
canonically (by sorted signature) after every refinement round, so the
classes of any stable partition are invariant under the group; that is
what makes the orbit pruning and the orbit-stabilizer order count
exact.  Graphs enter through their distance or edge/non-edge coloring.

Worst cases are exponential, so a size guard (default 200 vertices)
gates every search; callers opt out explicitly via force.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import DisconnectedGraph, SizeGuard
from .graphs import Graph, all_pairs_distances
from .scheme import ColoredCompleteGraph, adjacency_coloring

SIZE_GUARD_DEFAULT = 200

Perm = Tuple[int, ...]
ColorRows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PermutationSet:
    """A set of permutations of {0..n-1}, one-line (image) notation."""

    n: int
    generators: Tuple[Perm, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n or sorted(g) != list(range(self.n)):
                raise ValueError(f"not a permutation of 0..{self.n - 1}: {g}")


@dataclass(frozen=True)
class OrbitalPartition:
    """Orbit ids for every ordered pair, numbered by least pair."""

    n: int
    ids: Tuple[int, ...]  # row-major, length n*n
    count: int

    def id_of(self, x: int, y: int) -> int:
        return self.ids[x * self.n + y]

    def sample_json(self) -> dict:
        """Compact summary: per orbital, its size and least pair."""
        first: Dict[int, List[int]] = {}
        sizes: Dict[int, int] = {}
        for x in range(self.n):
            for y in range(self.n):
                oid = self.id_of(x, y)
                sizes[oid] = sizes.get(oid, 0) + 1
                if oid not in first:
                    first[oid] = [x, y]
        return {
            "count": self.count,
            "orbitals": [
                {"id": oid, "size": sizes[oid], "least_pair": first[oid]}
                for oid in range(self.count)
            ],
        }


def _signatures(color: ColorRows, classes: Sequence[int]):
    n = len(classes)
    sigs = []
    for x in range(n):
        row = color[x]
        cnt = Counter()
        for y in range(n):
            if y != x:
                cnt[(classes[y], row[y])] += 1
        sigs.append((classes[x], tuple(sorted(cnt.items()))))
    return sigs


def _refine(color: ColorRows, classes: Sequence[int]) -> List[int]:
    """Refine to the stable partition, classes canonically renumbered."""
    classes = list(classes)
    k = len(set(classes))
    while True:
        sigs = _signatures(color, classes)
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        classes = [ids[s] for s in sigs]
        if len(ids) == k:
            return classes
        k = len(ids)


def _refine_pair(color: ColorRows, dom: Sequence[int], img: Sequence[int]):
    """Refine two partitions of the same coloring in lockstep.

    Returns (dom, img) stable and canonically numbered, or None as soon
    as their signature multisets diverge (no automorphism can align
    them)."""
    dom, img = list(dom), list(img)
    if Counter(dom) != Counter(img):
        return None
    k = len(set(dom))
    while True:
        dsig = _signatures(color, dom)
        isig = _signatures(color, img)
        if Counter(dsig) != Counter(isig):
            return None
        ids = {s: i for i, s in enumerate(sorted(set(dsig)))}
        dom = [ids[s] for s in dsig]
        img = [ids[s] for s in isig]
        if len(ids) == k:
            return dom, img
        k = len(ids)


def _target_cell(classes: Sequence[int]) -> Optional[int]:
    """Class id of the first smallest non-singleton cell, or None."""
    sizes = Counter(classes)
    best = None
    for cid, sz in sizes.items():
        if sz > 1 and (best is None or (sz, cid) < best):
            best = (sz, cid)
    return None if best is None else best[1]


def _individualize(classes: Sequence[int], v: int) -> List[int]:
    out = list(classes)
    out[v] = max(classes) + 1
    return out


def _is_automorphism(color: ColorRows, perm: Perm) -> bool:
    n = len(perm)
    for x in range(n):
        row = color[x]
        prow = color[perm[x]]
        for y in range(x + 1, n):
            if prow[perm[y]] != row[y]:
                return False
    return True


def _perm_from_discrete(dom: Sequence[int], img: Sequence[int]) -> Perm:
    n = len(dom)
    where = [0] * n
    for x, cid in enumerate(img):
        where[cid] = x
    return tuple(where[dom[x]] for x in range(n))


def _find_one(color: ColorRows, dom: List[int], img: List[int]) -> Optional[Perm]:
    """First automorphism aligning the two partitions, depth first."""
    cid = _target_cell(dom)
    if cid is None:
        perm = _perm_from_discrete(dom, img)
        return perm if _is_automorphism(color, perm) else None
    n = len(dom)
    v = next(x for x in range(n) if dom[x] == cid)
    for u in (x for x in range(n) if img[x] == cid):
        refined = _refine_pair(
            color, _individualize(dom, v), _individualize(img, u)
        )
        if refined is not None:
            found = _find_one(color, *refined)
            if found is not None:
                return found
    return None


def _orbit(v: int, gens: Sequence[Perm]) -> Set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _aut_search(color: ColorRows, classes: List[int]) -> Tuple[List[Perm], int]:
    """Generators and exact order of the group preserving each class.

    Orbit-stabilizer recursion: individualize the first vertex v of the
    target cell to get the stabilizer, then add one representative per
    new orbit point of v, skipping candidates already reachable."""
    cid = _target_cell(classes)
    if cid is None:
        return [], 1
    n = len(classes)
    v = next(x for x in range(n) if classes[x] == cid)
    gens, sub_order = _aut_search(color, _refine(color, _individualize(classes, v)))
    gens = list(gens)
    orbit = _orbit(v, gens)
    for u in range(n):
        if classes[u] != cid or u in orbit:
            continue
        start = _refine_pair(
            color, _individualize(classes, v), _individualize(classes, u)
        )
        if start is None:
            continue
        found = _find_one(color, *start)
        if found is not None:
            gens.append(found)
            orbit = _orbit(v, gens)
    return gens, len(orbit) * sub_order


def _guard(n: int, force: bool, limit: int):
    if n > limit and not force:
        raise SizeGuard(
            f"{n} vertices exceeds the automorphism-search limit {limit}; "
            "pass force to override"
        )


def automorphism_generators(
    cg: ColoredCompleteGraph, *, force: bool = False, limit: int = SIZE_GUARD_DEFAULT
) -> PermutationSet:
    """Generating set of the full color-preserving automorphism group."""
    _guard(cg.n, force, limit)
    classes = _refine(cg.color, [0] * cg.n)
    gens, _ = _aut_search(cg.color, classes)
    for g in gens:
        if not _is_automorphism(cg.color, g):
            raise AssertionError(f"search produced a non-automorphism: {g}")
    return PermutationSet(cg.n, tuple(gens))


def group_order(ps: PermutationSet) -> int:
    """Order of the generated group, by orbit-stabilizer recursion on
    the least moved point with Schreier generators.

    Independent of the search above; usable as a recount oracle."""
    identity = tuple(range(ps.n))

    def compose(g: Perm, h: Perm) -> Perm:
        return tuple(g[h[i]] for i in range(len(h)))

    def inverse(g: Perm) -> Perm:
        inv = [0] * len(g)
        for i, gi in enumerate(g):
            inv[gi] = i
        return tuple(inv)

    def order_of(gens: Set[Perm]) -> int:
        gens = {g for g in gens if g != identity}
        if not gens:
            return 1
        beta = min(i for g in gens for i in range(ps.n) if g[i] != i)
        transversal = {beta: identity}
        frontier = [beta]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in transversal:
                    transversal[y] = compose(g, transversal[x])
                    frontier.append(y)
        stab: Set[Perm] = set()
        for x, t in transversal.items():
            for g in gens:
                u = transversal[g[x]]
                stab.add(compose(inverse(u), compose(g, t)))
        return len(transversal) * order_of(stab)

    return order_of(set(ps.generators))


def orbitals(ps: PermutationSet) -> OrbitalPartition:
    """Orbit closure of the generators on ordered pairs, numbered by
    least unvisited pair in row-major order."""
    n = ps.n
    ids = [-1] * (n * n)
    count = 0
    for x in range(n):
        for y in range(n):
            if ids[x * n + y] != -1:
                continue
            ids[x * n + y] = count
            stack = [(x, y)]
            while stack:
                a, b = stack.pop()
                for g in ps.generators:
                    pa, pb = g[a], g[b]
                    if ids[pa * n + pb] == -1:
                        ids[pa * n + pb] = count
                        stack.append((pa, pb))
            count += 1
    return OrbitalPartition(n, tuple(ids), count)


def is_distance_transitive(
    g: Graph, *, force: bool = False, limit: int = SIZE_GUARD_DEFAULT
) -> bool:
    """Whether Aut(g) is transitive on ordered pairs at each distance.

    Decided by comparing the orbitals of Aut(g), computed from the
    edge/non-edge coloring, against the BFS distance classes."""
    dm = all_pairs_distances(g)
    if not dm.is_connected():
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")
    ps = automorphism_generators(adjacency_coloring(g), force=force, limit=limit)
    orb = orbitals(ps)
    by_distance: Dict[int, Set[int]] = {}
    for x in range(g.n):
        for y in range(g.n):
            by_distance.setdefault(dm.get(x, y), set()).add(orb.id_of(x, y))
    return all(len(ids) == 1 for ids in by_distance.values())


def is_algebraic(
    cg: ColoredCompleteGraph, *, force: bool = False, limit: int = SIZE_GUARD_DEFAULT
) -> bool:
    """Whether every color class (identity included) is exactly one
    orbital of the coloring's automorphism group."""
    ps = automorphism_generators(cg, force=force, limit=limit)
    orb = orbitals(ps)
    by_color: Dict[int, Set[int]] = {}
    for x in range(cg.n):
        row = cg.color[x]
        for y in range(cg.n):
            by_color.setdefault(row[y], set()).add(orb.id_of(x, y))
    return all(len(ids) == 1 for ids in by_color.values())


def format_generators(ps: PermutationSet) -> str:
    """One generator per line in image notation: `g: 3 0 1 2`."""
    lines = [f"g: {' '.join(map(str, g))}" for g in ps.generators]
    return "\n".join(lines) + ("\n" if lines else "")

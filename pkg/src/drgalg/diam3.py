"""Closed-form intersection numbers for diameter 3 and the cycle table.

The three diversity atoms map to distances as b <-> 1, a <-> 2,
c <-> 3.  Every formula is evaluated verbatim as an exact rational and
asserted integral and nonnegative; an array that fails either check is
not realizable and is rejected with the offending entry named.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from .errors import NegativeEntry, NonIntegralEntry
from .scheme import IntersectionArray, IntersectionTensor, layer_sizes

# The ten diversity cycle types, in catalog order.
CYCLE_TYPES = ("aaa", "bbb", "ccc", "abb", "baa", "acc", "caa", "bcc", "cbb", "abc")

ATOM_FOR_DISTANCE = {1: "b", 2: "a", 3: "c"}
DISTANCE_FOR_ATOM = {"b": 1, "a": 2, "c": 3}

# One positivity witness (h, i, j) per cycle type; the alternatives
# listed alongside are equivalent through the k_h p_ij^h identity.
RELEVANT_ENTRY = {
    "aaa": (2, 2, 2),
    "bbb": (1, 1, 1),
    "ccc": (3, 3, 3),
    "abb": (1, 1, 2),  # or (2, 1, 1)
    "baa": (2, 1, 2),  # or (1, 2, 2)
    "acc": (3, 2, 3),  # or (2, 3, 3)
    "caa": (3, 2, 2),  # or (2, 2, 3)
    "bcc": (3, 1, 3),  # or (1, 3, 3)
    "cbb": (1, 1, 3),  # or (3, 1, 1); identically zero
    "abc": (2, 1, 3),  # or (1, 2, 3) or (3, 1, 2)
}


def cycle_name(letters: Iterable[str]) -> str:
    """Canonical name of a diversity cycle given its three atoms.

    Monochromatic triples are xxx, two-plus-one triples put the odd
    atom first (abb, caa, ...), and all-distinct is abc.
    """
    atoms = sorted(letters)
    if len(atoms) != 3 or any(x not in DISTANCE_FOR_ATOM for x in atoms):
        raise ValueError(f"not a diversity cycle: {letters!r}")
    x, y, z = atoms
    if x == z:
        return x * 3
    if x == y:
        return z + x + x
    if y == z:
        return x + y + y
    return "abc"


def cycle_colors(name: str) -> Tuple[int, int, int]:
    """Distance triple (sorted) for a cycle-type name."""
    return tuple(sorted(DISTANCE_FOR_ATOM[x] for x in name))


def cycle_for_colors(triple: Sequence[int]) -> str:
    """Cycle-type name for a triple of distances in 1..3."""
    return cycle_name(ATOM_FOR_DISTANCE[c] for c in triple)


@dataclass(frozen=True)
class Diam3Formulas:
    """Closed-form tensor for a diameter-3 array.

    diversity holds the 27 entries p[(h,i,j)] for h,i,j in 1..3;
    tensor is the full 4x4x4 completion including the identity color.
    """

    array: IntersectionArray
    diversity: Dict[Tuple[int, int, int], int]
    tensor: IntersectionTensor

    def entry(self, h: int, i: int, j: int) -> int:
        return self.diversity[(h, i, j)]


def closed_form_tensor(arr: IntersectionArray) -> Diam3Formulas:
    """Evaluate the diameter-3 intersection-number formulas verbatim.

    Raises NonIntegralEntry or NegativeEntry naming the first offending
    entry (scanned base 1, 2, 3, upper triangle within each base).
    """
    if arr.d != 3:
        raise ValueError(f"need a diameter-3 array, got d={arr.d}")
    b0, b1, b2 = (Fraction(v) for v in arr.b)
    c1, c2, c3 = (Fraction(v) for v in arr.c)
    a1, a2, a3 = (Fraction(arr.a(i)) for i in (1, 2, 3))

    base_b = {
        (1, 1): a1,
        (1, 2): b1,
        (1, 3): Fraction(0),
        (2, 2): b1 * a2 / c2,
        (2, 3): b1 * b2 / c2,
        (3, 3): b1 * b2 * a3 / (c2 * c3),
    }
    base_a = {
        (1, 1): c2,
        (1, 2): a2,
        (1, 3): b2,
        (2, 2): (b1 * c2 + a2 * a2 + b2 * c3 - b0 - a1 * a2) / c2,
        (2, 3): b2 * (a2 + a3 - a1) / c2,
        (3, 3): b0 * b1 * b2 / (c2 * c3) - b2 - b2 * (a2 + a3 - a1) / c2,
    }
    p23_3 = (a3 * (a3 - a1) + b2 * c3 - b0) / c2
    # the same entry before the a_2 = b_0 - b_2 - c_2 substitution;
    # kept as a regression check on the derivation
    p23_3_unsimplified = b0 * b1 / c2 - c3 - c3 * (a2 + a3 - a1) / c2
    if p23_3 != p23_3_unsimplified:
        raise AssertionError(
            f"p_23^3 simplification mismatch: {p23_3} vs {p23_3_unsimplified}"
        )
    base_c = {
        (1, 1): Fraction(0),
        (1, 2): c3,
        (1, 3): a3,
        (2, 2): c3 * (a2 + a3 - a1) / c2,
        (2, 3): p23_3,
        (3, 3): b0 * b1 * b2 / (c2 * c3) - 1 - a3 - p23_3,
    }

    diversity: Dict[Tuple[int, int, int], int] = {}
    for h, table in ((1, base_b), (2, base_a), (3, base_c)):
        for (i, j), value in table.items():
            if value.denominator != 1:
                raise NonIntegralEntry(f"p[{h}][{i}][{j}] = {value} is not integral")
            entry = int(value)
            if entry < 0:
                raise NegativeEntry(f"p[{h}][{i}][{j}] = {entry} is negative")
            diversity[(h, i, j)] = entry
            diversity[(h, j, i)] = entry

    k = layer_sizes(arr)
    p = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i in range(4):
        p[0][i][i] = k[i]
    for h in range(1, 4):
        p[h][0][h] = p[h][h][0] = 1
        for i in range(1, 4):
            for j in range(1, 4):
                p[h][i][j] = diversity[(h, i, j)]
    tensor = IntersectionTensor(
        3,
        tuple(tuple(tuple(row) for row in plane) for plane in p),
        tuple(k),
    )
    tensor.validate(sum(k))
    return Diam3Formulas(arr, diversity, tensor)


@dataclass(frozen=True)
class CycleTable:
    """Mandatory diversity cycles; the other types are forbidden."""

    mandatory: FrozenSet[str]

    def __post_init__(self):
        bad = self.mandatory - set(CYCLE_TYPES)
        if bad:
            raise ValueError(f"unknown cycle types: {sorted(bad)}")

    @property
    def forbidden(self) -> FrozenSet[str]:
        return frozenset(CYCLE_TYPES) - self.mandatory

    def sorted_mandatory(self) -> Tuple[str, ...]:
        return tuple(t for t in CYCLE_TYPES if t in self.mandatory)

    def sorted_forbidden(self) -> Tuple[str, ...]:
        return tuple(t for t in CYCLE_TYPES if t not in self.mandatory)


def cycle_table(arr: IntersectionArray) -> CycleTable:
    """Mandatory cycles of the induced four-atom algebra: a diversity
    cycle occurs iff its relevant intersection number is positive."""
    formulas = closed_form_tensor(arr)
    mandatory = frozenset(
        t for t in CYCLE_TYPES if formulas.diversity[RELEVANT_ENTRY[t]] > 0
    )
    return CycleTable(mandatory)


def composition_table(
    mandatory,
    atoms: Sequence[str] = ("a", "b", "c"),
) -> str:
    """Render the diversity-atom products induced by a cycle set.

    Each line gives x;y as the sum of atoms z whose triangle {x,y,z}
    is mandatory, plus the identity when x = y.  Accepts a CycleTable
    or any iterable of cycle-type names.
    """
    if isinstance(mandatory, CycleTable):
        mandatory = mandatory.mandatory
    allowed = {tuple(sorted(t)) for t in mandatory}
    lines = []
    for xi, x in enumerate(atoms):
        for y in atoms[xi:]:
            parts = ["1'"] if x == y else []
            parts.extend(
                z for z in atoms if tuple(sorted((x, y, z))) in allowed
            )
            lines.append(f"{x};{y} = " + (" + ".join(parts) if parts else "0"))
    return "\n".join(lines)

"""The lattice of unions of minimal non-faces and its interval homology.

For ``S`` in the lattice, ``h(i, S)`` is the ``i``-th reduced Betti number of
the open interval ``(∅, S)``; the multigraded Betti number of the
Stanley-Reisner ring in degree ``(i, S)`` equals ``h(i - 2, S)``.

Two routes compute ``h``.  ``method="crosscut"`` (the default) uses the
crosscut complex on the atoms below ``S``: atom sets whose union falls short
of ``S``.  It is homotopy equivalent to the interval but has at most
``2^m`` faces.  ``method="order"`` builds the order complex of the interval
itself, which is exponentially larger on big lattices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .complex import MnfComplex, as_mask, normal_key, to_set
from .errors import NotInLattice, TooLarge
from .homology import GF2, FieldSpec, betti_of_faces

MAX_GENERATORS = 24


@dataclass(frozen=True)
class LcmLattice:
    """All unions of minimal non-faces, bottom ``∅`` included.

    ``below[S]`` is the bitmask of non-face indices ``j`` with ``M_j ⊆ S``.
    """

    n: int
    generators: tuple[int, ...]
    elements: tuple[int, ...]
    below: dict = field(compare=False, repr=False)

    def __contains__(self, s) -> bool:
        return s in self.below

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def top(self) -> int:
        return self.elements[-1]


def build_lattice(c: MnfComplex) -> LcmLattice:
    if c.m > MAX_GENERATORS:
        raise TooLarge(f"{c.m} minimal non-faces; the lattice is capped at {MAX_GENERATORS}")
    found = {0}
    for x in c.masks:
        found |= {y | x for y in found}
    elements = tuple(sorted(found, key=normal_key))
    below = {}
    for s in elements:
        b = 0
        for j, x in enumerate(c.masks):
            if x & s == x:
                b |= 1 << j
        below[s] = b
    return LcmLattice(c.n, c.masks, elements, below)


def interval_order_complex(lat: LcmLattice, s) -> tuple[MnfComplex, tuple[int, ...]]:
    """Order complex of the open interval ``(∅, S)``.

    Order complexes are flag complexes, so the minimal non-faces are the
    incomparable pairs.  Returns the complex and the lattice element behind
    each of its vertices.
    """
    sm = as_mask(s, lat.n)
    if sm not in lat:
        raise NotInLattice(f"{sorted(to_set(sm))} is not a union of minimal non-faces")
    inside = tuple(a for a in lat.elements if a and a != sm and a & sm == a)
    pairs = []
    for i, a in enumerate(inside):
        for j in range(i + 1, len(inside)):
            b = inside[j]
            if a & b != a and a & b != b:
                pairs.append((1 << i) | (1 << j))
    return MnfComplex.from_masks(len(inside), pairs, check=False), inside


def _crosscut_faces(lat: LcmLattice, s: int) -> list[int]:
    atoms = [x for x in lat.generators if x & s == x and x != s]
    faces = [0]
    stack = [(0, 0, 0)]  # (face, union, next atom)
    while stack:
        f, u, start = stack.pop()
        for k in range(start, len(atoms)):
            v = u | atoms[k]
            if v != s:
                g = f | (1 << k)
                faces.append(g)
                stack.append((g, v, k + 1))
    return faces


def interval_betti(lat: LcmLattice, s: int, field: FieldSpec = GF2, method: str = "crosscut") -> list[int]:
    """``[h(-2, S), h(-1, S), h(0, S), ...]`` for ``S`` in the lattice."""
    if s not in lat:
        raise NotInLattice(f"{sorted(to_set(s))} is not in the lattice")
    if s == 0:
        return [1]
    if method == "crosscut":
        faces = _crosscut_faces(lat, s)
    elif method == "order":
        faces = interval_order_complex(lat, s)[0].faces
    else:
        raise ValueError(f"unknown method {method!r}")
    return [0] + betti_of_faces(faces, field)


def h(c: MnfComplex, i: int, s, field: FieldSpec = GF2, *, lattice: LcmLattice | None = None,
      method: str = "crosscut") -> int:
    """Reduced ``i``-th homology dimension of ``(∅, S)``; zero off the lattice."""
    lat = lattice if lattice is not None else build_lattice(c)
    sm = as_mask(s, c.n)
    if sm not in lat:
        return 0
    vec = interval_betti(lat, sm, field, method)
    return vec[i + 2] if 0 <= i + 2 < len(vec) else 0


@dataclass
class BettiTable:
    """Non-zero multigraded Betti numbers ``β_{i,S}`` keyed by ``(i, mask)``."""

    n: int
    entries: dict[tuple[int, int], int]

    def total(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def __getitem__(self, key) -> int:
        i, s = key
        return self.entries.get((i, as_mask(s, self.n)), 0)


def _h_table(c: MnfComplex, field: FieldSpec, method: str = "crosscut"):
    lat = build_lattice(c)
    return lat, {s: interval_betti(lat, s, field, method) for s in lat.elements}


def betti_table(c: MnfComplex, field: FieldSpec = GF2, method: str = "crosscut") -> BettiTable:
    _, table = _h_table(c, field, method)
    entries = {}
    for s, vec in table.items():
        for k, v in enumerate(vec):
            if v:
                entries[(k, s)] = v  # vec[k] = h(k - 2, S) = β_{k,S}
    return BettiTable(c.n, entries)


@dataclass(frozen=True)
class Violation:
    i: int
    s: frozenset
    left: int
    right: int


def check_duality(c: MnfComplex, field: FieldSpec = GF2) -> list[Violation]:
    """Test ``h(i-2, S) = h(n-d-i-2, S̄)`` over ``S`` in ``L`` and their complements."""
    lat, table = _h_table(c, field)
    codim = c.n - c.d
    full = c.full

    def hh(k: int, s: int) -> int:
        vec = table.get(s)
        if vec is None or not 0 <= k + 2 < len(vec):
            return 0
        return vec[k + 2]

    subjects = sorted(set(lat.elements) | {full & ~s for s in lat.elements}, key=normal_key)
    out = []
    for s in subjects:
        comp = full & ~s
        for i in range(codim + 1):
            left, right = hh(i - 2, s), hh(codim - i - 2, comp)
            if left != right:
                out.append(Violation(i, to_set(s), left, right))
    return out


def complements_in_lattice(c: MnfComplex, lat: LcmLattice | None = None) -> bool:
    """Every minimal non-face has its complement in the lattice."""
    lat = lat if lat is not None else build_lattice(c)
    return all(c.full & ~x in lat for x in c.masks)

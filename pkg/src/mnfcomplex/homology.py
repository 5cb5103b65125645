"""Reduced simplicial homology over a field and the homology-sphere test.

Conventions: the complex ``{∅}`` has ``H̃_{-1} = k``; once a vertex exists the
augmentation map kills it.  A "homology sphere" is a pure complex in which
the link of every face (the empty face included) has the reduced homology
of a sphere of the link's dimension over the chosen field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import MnfComplex, bits, free_vertices, is_pure
from .linalg import rank_gf2, rank_mod_p, rank_rational


@dataclass(frozen=True)
class FieldSpec:
    """A prime ``p`` for arithmetic mod ``p``; ``None`` for the rationals."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or self.p >= 1 << 16 or not _is_prime(self.p)):
            raise ValueError(f"field characteristic must be a prime below 2^16, got {self.p}")

    @property
    def name(self) -> str:
        return "rat" if self.p is None else f"gf{self.p}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("rat", "q", "qq", "rational", "rationals"):
            return cls(None)
        if t.startswith("gf") and t[2:].isdigit():
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {text!r}; use gf2, gf<p> or rat")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


GF2 = FieldSpec(2)
QQ = FieldSpec(None)


def _by_size(faces: Iterable[int]) -> list[list[int]]:
    groups: list[list[int]] = []
    for f in faces:
        k = f.bit_count()
        while len(groups) <= k:
            groups.append([])
        groups[k].append(f)
    return groups


def _rank_between(upper: Sequence[int], lower: Sequence[int], field: FieldSpec) -> int:
    """Rank of the boundary map from faces ``upper`` to faces ``lower``."""
    if not upper or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if field.p == 2:
        rows = []
        for f in upper:
            row = 0
            rest = f
            while rest:
                low = rest & -rest
                row |= 1 << index[f ^ low]
                rest ^= low
            rows.append(row)
        return rank_gf2(rows)
    drows = []
    for f in upper:
        row = {}
        for pos, v in enumerate(bits(f)):
            row[index[f ^ (1 << v)]] = -1 if pos % 2 else 1
        drows.append(row)
    if field.p is None:
        return rank_rational(drows)
    return rank_mod_p(drows, field.p)


def betti_of_faces(faces: Iterable[int], field: FieldSpec = GF2) -> list[int]:
    """Reduced Betti numbers ``b̃_{-1}, ..., b̃_{dim}`` of a face list.

    ``faces`` must be closed under taking subsets and contain the empty set.
    """
    groups = _by_size(faces)
    ranks = [_rank_between(groups[k], groups[k - 1], field) for k in range(1, len(groups))]
    ranks.append(0)
    # ranks[k-1] is the rank of the map out of faces of size k
    out = []
    for k in range(len(groups)):
        leaving = ranks[k - 1] if k >= 1 else 0
        out.append(len(groups[k]) - leaving - ranks[k])
    return out


def boundary_rank(c: MnfComplex, i: int, field: FieldSpec = GF2) -> int:
    """Rank of ``∂_i`` (i-chains to (i-1)-chains), augmentation included."""
    groups = _by_size(c.faces)
    k = i + 1
    if k < 1 or k >= len(groups):
        return 0
    return _rank_between(groups[k], groups[k - 1], field)


def reduced_betti(c: MnfComplex, field: FieldSpec = GF2) -> list[int]:
    return betti_of_faces(c.faces, field)


def reduced_euler(faces: Iterable[int]) -> int:
    return sum(1 if f.bit_count() % 2 else -1 for f in faces)


def _is_sphere_homology(betti: Sequence[int], e: int) -> bool:
    return all(b == (1 if i - 1 == e else 0) for i, b in enumerate(betti))


def is_homology_sphere(c: MnfComplex, field: FieldSpec = GF2) -> bool:
    """Pure, and every face link has the homology of a sphere of its dimension."""
    if c.n == 0:
        return True
    if not is_pure(c):
        return False
    d = c.d
    faces = c.faces
    if reduced_euler(faces) != (-1) ** (d - 1):
        return False
    groups = _by_size(faces)
    # ridges must lie in exactly two facets
    facets = groups[d]
    count: dict[int, int] = {}
    for f in facets:
        rest = f
        while rest:
            low = rest & -rest
            r = f ^ low
            count[r] = count.get(r, 0) + 1
            rest ^= low
    if any(count.get(r, 0) != 2 for r in groups[d - 1]):
        return False
    # remaining links, smallest first
    for k in range(d - 2, -1, -1):
        e = d - 1 - k
        for f in groups[k]:
            link = [h ^ f for h in faces if h & f == f]
            if reduced_euler(link) != (-1) ** e:
                return False
            if not _is_sphere_homology(betti_of_faces(link, field), e):
                return False
    return True


def is_cone(c: MnfComplex) -> bool:
    """Some vertex lies in no minimal non-face."""
    return free_vertices(c) != 0

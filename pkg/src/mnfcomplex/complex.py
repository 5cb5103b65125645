"""Simplicial complexes stored by their minimal non-faces.

A complex on the ground set ``[n] = {1, ..., n}`` is determined by the
antichain of its minimal non-faces: a vertex set is a face exactly when it
contains none of them.  Internally every vertex set is an ``int`` bitmask
with bit ``v - 1`` standing for vertex ``v``; the public functions speak
1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import AntichainViolation, RangeViolation, SizeViolation, TooLarge

#: hard cap on the number of faces enumerated for one complex
MAX_FACES = 4_000_000


def normal_key(mask: int) -> tuple[int, int]:
    """Sort key for vertex sets: cardinality first, then colex.

    Colex order on bitmasks coincides with plain integer order.
    """
    return (mask.bit_count(), mask)


def to_mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int):
            raise RangeViolation(f"vertex label {v!r} is not an integer")
        if not 1 <= v <= n:
            raise RangeViolation(f"vertex {v} outside ground set 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def as_mask(s, n: int) -> int:
    """Accept either a bitmask or an iterable of 1-based labels."""
    if isinstance(s, int) and not isinstance(s, bool):
        if s < 0 or s >> n:
            raise RangeViolation(f"mask {s:#b} has bits outside 1..{n}")
        return s
    return to_mask(s, n)


def to_set(mask: int) -> frozenset[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def bits(mask: int) -> list[int]:
    """0-based indices of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def sorted_labels(mask: int) -> list[int]:
    return [i + 1 for i in bits(mask)]


@dataclass(frozen=True)
class MnfComplex:
    """A simplicial complex on ``[n]`` given by its minimal non-faces.

    ``masks`` holds the minimal non-faces as bitmasks in normal order.  Use
    :func:`new_complex` (or :meth:`from_masks`) rather than the raw
    constructor; those validate and sort.
    """

    n: int
    masks: tuple[int, ...]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], *, check: bool = True) -> "MnfComplex":
        ms = sorted(set(masks) if not check else masks, key=normal_key)
        if check:
            _validate(n, ms)
        return cls(n, tuple(ms))

    @property
    def m(self) -> int:
        return len(self.masks)

    @property
    def mnf(self) -> list[frozenset[int]]:
        return [to_set(x) for x in self.masks]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def is_face_mask(self, f: int) -> bool:
        for x in self.masks:
            if x & f == x:
                return False
        return True

    @cached_property
    def faces(self) -> tuple[int, ...]:
        """All faces as bitmasks, the empty face included."""
        return tuple(enumerate_faces(self.n, self.masks))

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        faceset = set(self.faces)
        out = []
        for f in self.faces:
            free = self.full & ~f
            maximal = True
            while free:
                low = free & -free
                if f | low in faceset:
                    maximal = False
                    break
                free ^= low
            if maximal:
                out.append(f)
        return tuple(sorted(out, key=normal_key))

    @cached_property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facet_masks) - 1

    @property
    def d(self) -> int:
        return self.dim + 1

    @cached_property
    def vertex_membership(self) -> tuple[int, ...]:
        """For each vertex (0-based) the bitmask of non-face indices containing it."""
        rows = [0] * self.n
        for j, x in enumerate(self.masks):
            for v in bits(x):
                rows[v] |= 1 << j
        return tuple(rows)

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted_labels(x))) + "}" for x in self.masks)
        return f"MnfComplex(n={self.n}, mnf=[{body}])"


def _validate(n: int, masks: list[int]) -> None:
    if n < 0:
        raise RangeViolation("ground set size must be non-negative")
    for x in masks:
        if x < 0 or x >> n:
            raise RangeViolation(f"non-face {sorted_labels(x)} leaves 1..{n}")
        if x.bit_count() < 2:
            raise SizeViolation(
                f"non-face {sorted_labels(x)} has fewer than two vertices; shrink n instead"
            )
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b == a or a & b == b:
                if a == b:
                    raise AntichainViolation(f"duplicate non-face {sorted_labels(a)}")
                raise AntichainViolation(
                    f"non-faces {sorted_labels(a)} and {sorted_labels(b)} are nested"
                )


def new_complex(n: int, sets: Iterable[Iterable[int]]) -> MnfComplex:
    """Validate 1-based vertex sets and build the complex in normal order."""
    masks = [to_mask(s, n) for s in sets]
    return MnfComplex.from_masks(n, masks)


def enumerate_faces(n: int, masks: Iterable[int], limit: int = MAX_FACES) -> list[int]:
    """Depth-first listing of every set containing no member of ``masks``."""
    through = [[] for _ in range(n)]
    for x in masks:
        for v in bits(x):
            through[v].append(x)
    out = [0]
    stack = [(0, 0)]  # (face, next vertex to try)
    while stack:
        f, start = stack.pop()
        for v in range(start, n):
            g = f | (1 << v)
            if all(x & g != x for x in through[v]):
                out.append(g)
                if len(out) > limit:
                    raise TooLarge(f"more than {limit} faces")
                stack.append((g, v + 1))
    return out


def is_face(c: MnfComplex, s) -> bool:
    return c.is_face_mask(as_mask(s, c.n))


def facets(c: MnfComplex) -> list[frozenset[int]]:
    return [to_set(f) for f in c.facet_masks]


def dimension(c: MnfComplex) -> int:
    return c.dim


def is_pure(c: MnfComplex) -> bool:
    sizes = {f.bit_count() for f in c.facet_masks}
    return len(sizes) == 1


def f_vector(c: MnfComplex) -> list[int]:
    """Face counts by dimension, starting with the empty face."""
    counts = [0] * (c.d + 1)
    for f in c.faces:
        counts[f.bit_count()] += 1
    return counts


def alpha(c: MnfComplex) -> int:
    """Excess of the non-face count over the codimension, ``m - (n - d)``."""
    return c.m - (c.n - c.d)


def is_blocking(c: MnfComplex, s) -> bool:
    """True when ``s`` meets every minimal non-face."""
    b = as_mask(s, c.n)
    return all(x & b for x in c.masks)


def min_blocking_size(c: MnfComplex) -> int:
    return c.n - c.d


def free_vertices(c: MnfComplex) -> int:
    """Mask of the vertices lying in no minimal non-face."""
    covered = 0
    for x in c.masks:
        covered |= x
    return c.full & ~covered


def relabel(c: MnfComplex, perm) -> MnfComplex:
    """Apply ``perm`` (old 0-based vertex -> new 0-based vertex)."""
    return MnfComplex.from_masks(c.n, [permute_mask(x, perm) for x in c.masks], check=False)


def permute_mask(mask: int, perm) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def compact(n: int, masks: Iterable[int], keep: int) -> tuple[MnfComplex, tuple[int, ...]]:
    """Restrict to the vertices in ``keep`` and renumber them ``1..k``.

    Returns the complex and, for each new vertex, its old 1-based label.
    """
    old = bits(keep)
    perm = {v: i for i, v in enumerate(old)}
    new = [permute_mask(x, perm) for x in masks]
    return MnfComplex.from_masks(len(old), new, check=False), tuple(v + 1 for v in old)


def minimal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of sets (duplicates dropped)."""
    ordered = sorted(set(masks), key=normal_key)
    out: list[int] = []
    for x in ordered:
        if not any(y & x == y for y in out):
            out.append(x)
    return out


def from_facets(n: int, facet_sets: Iterable) -> MnfComplex:
    """Complex generated by the given facets, converted to minimal non-faces."""
    fm = [as_mask(f, n) for f in facet_sets]

    def face(s: int) -> bool:
        return any(s & f == s for f in fm)

    out = []
    for s in range(1 << n):
        if face(s):
            continue
        rest = s
        ok = True
        while rest:
            low = rest & -rest
            if not face(s ^ low):
                ok = False
                break
            rest ^= low
        if ok:
            out.append(s)
    # singleton non-faces would mean unused vertices; the caller owns that
    return MnfComplex.from_masks(n, out)

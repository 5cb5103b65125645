"""Operations producing new complexes, and the named families.

Every operation works on minimal non-faces directly.  ``link`` and
``induced`` renumber the surviving vertices ``1..k`` and hand back the old
labels alongside the result.
"""

from __future__ import annotations

from typing import NamedTuple

from .complex import (
    MnfComplex,
    as_mask,
    compact,
    from_facets,
    minimal_sets,
    to_mask,
)
from .errors import InvalidParameter, NotAFace, RangeViolation

EMPTY = MnfComplex(0, ())  # the complex {∅}


class Relabeled(NamedTuple):
    complex: MnfComplex
    labels: tuple[int, ...]  # labels[i] is the old label of new vertex i + 1


def join(a: MnfComplex, b: MnfComplex) -> MnfComplex:
    """Join on disjoint vertex sets; ``b``'s labels are shifted by ``a.n``."""
    masks = list(a.masks) + [x << a.n for x in b.masks]
    return MnfComplex.from_masks(a.n + b.n, masks, check=False)


def one_point_suspension(c: MnfComplex, v: int) -> MnfComplex:
    """Double vertex ``v``: the new vertex ``n + 1`` joins every non-face through ``v``."""
    if not 1 <= v <= c.n:
        raise RangeViolation(f"vertex {v} outside 1..{c.n}")
    bit, new = 1 << (v - 1), 1 << c.n
    masks = [x | new if x & bit else x for x in c.masks]
    return MnfComplex.from_masks(c.n + 1, masks, check=False)


def two_point_suspension(c: MnfComplex) -> MnfComplex:
    return join(c, cross_polytope(1))


def link(c: MnfComplex, f) -> Relabeled:
    fm = as_mask(f, c.n)
    if not c.is_face_mask(fm):
        raise NotAFace(f"{sorted(f) if not isinstance(f, int) else f} is not a face")
    keep = 0
    for v in range(c.n):
        bit = 1 << v
        if not fm & bit and c.is_face_mask(fm | bit):
            keep |= bit
    reduced = [x & ~fm for x in c.masks if x & ~fm & ~keep == 0]
    return Relabeled(*compact(c.n, minimal_sets(reduced), keep))


def induced(c: MnfComplex, w) -> Relabeled:
    wm = as_mask(w, c.n)
    return Relabeled(*compact(c.n, [x for x in c.masks if x & wm == x], wm))


def simplex_boundary(k: int) -> MnfComplex:
    """Boundary of the ``k``-simplex; ``k = 0`` gives ``{∅}``."""
    if k < 0:
        raise InvalidParameter("k must be non-negative")
    if k == 0:
        return EMPTY
    return MnfComplex(k + 1, ((1 << (k + 1)) - 1,))


def full_simplex(n: int) -> MnfComplex:
    return MnfComplex(n, ())


def cross_polytope(d: int) -> MnfComplex:
    """Boundary of the ``d``-dimensional cross-polytope: non-faces ``{2i-1, 2i}``."""
    if d < 1:
        raise InvalidParameter("d must be at least 1")
    return MnfComplex.from_masks(2 * d, [3 << (2 * i) for i in range(d)], check=False)


def pentagon() -> MnfComplex:
    return MnfComplex.from_masks(5, [to_mask(s, 5) for s in ((1, 3), (1, 4), (2, 4), (2, 5), (3, 5))])


def pd_sphere(d: int) -> MnfComplex:
    """Cross-polytope boundary with a pyramid erected over one facet.

    Vertices ``x_i = 2i - 1``, ``y_i = 2i`` and apex ``2d + 1``.
    """
    if d < 2:
        raise InvalidParameter("d must be at least 2")
    apex = 1 << (2 * d)
    xs = [1 << (2 * i) for i in range(d)]
    ys = [1 << (2 * i + 1) for i in range(d)]
    masks = [x | y for x, y in zip(xs, ys)] + [apex | y for y in ys] + [sum(xs)]
    return MnfComplex.from_masks(2 * d + 1, masks)


def pd_sphere_from_facets(d: int) -> MnfComplex:
    """Same complex as :func:`pd_sphere`, built from its facet list."""
    if d < 2:
        raise InvalidParameter("d must be at least 2")
    n = 2 * d + 1
    removed = sum(1 << (2 * i) for i in range(d))
    facet_list = []
    for choice in range(1 << d):
        f = sum(1 << (2 * i + ((choice >> i) & 1)) for i in range(d))
        if f != removed:
            facet_list.append(f)
    apex = 1 << (2 * d)
    for i in range(d):
        facet_list.append(apex | (removed & ~(1 << (2 * i))))
    return from_facets(n, facet_list)


def gale_facets(d: int, n: int) -> list[int]:
    """The ``d``-subsets of ``[n]`` obeying Gale's evenness condition."""
    out = []
    for s in range(1 << n):
        if s.bit_count() != d:
            continue
        gaps = [v for v in range(n) if not s >> v & 1]
        ok = True
        for a, b in zip(gaps, gaps[1:]):
            between = (s >> (a + 1)) & ((1 << (b - a - 1)) - 1)
            if between.bit_count() % 2:
                ok = False
                break
        if ok:
            out.append(s)
    return out


def cyclic_boundary(d: int, n: int) -> MnfComplex:
    """Boundary complex of the cyclic polytope ``C_d(n)``."""
    if not n >= d + 1 >= 2:
        raise InvalidParameter("need n >= d + 1 >= 2")
    return from_facets(n, gale_facets(d, n))


def codim3_sphere(m: int) -> MnfComplex:
    """The ``m`` cyclic windows of length ``(m - 1) / 2`` on ``m`` vertices."""
    if m < 5 or m % 2 == 0:
        raise InvalidParameter("m must be odd and at least 5")
    width = (m - 1) // 2
    masks = []
    for i in range(1, m + 1):
        mask = 0
        for j in range(1, width + 1):
            mask |= 1 << ((i + j - 1) % m)
        masks.append(mask)
    return MnfComplex.from_masks(m, masks)


def cross_minus_facet(k: int) -> MnfComplex:
    """Cross-polytope boundary with the facet ``{x_1, ..., x_k}`` deleted."""
    if k < 2:
        raise InvalidParameter("k must be at least 2")
    masks = [3 << (2 * i) for i in range(k)] + [sum(1 << (2 * i) for i in range(k))]
    return MnfComplex.from_masks(2 * k, masks)

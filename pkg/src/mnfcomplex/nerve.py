"""The nerve of the minimal non-faces and the machinery built on it.

The nerve lives on the non-face indices ``1..m`` (in the complex's normal
order): a set of indices is a face when the corresponding non-faces share a
vertex.  Its facets are the maximal sets ``F_v = {j : v ∈ M_j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .complex import MnfComplex, bits, compact, normal_key, sorted_labels, to_set
from .constructions import one_point_suspension, two_point_suspension
from .errors import Irrecoverable, InvalidComplex, TooLarge


@dataclass(frozen=True)
class NerveComplex:
    m: int
    facet_masks: tuple[int, ...]

    @property
    def facets(self) -> list[frozenset[int]]:
        return [to_set(f) for f in self.facet_masks]

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facet_masks) - 1

    def is_face(self, s: int) -> bool:
        return any(s & f == s for f in self.facet_masks)

    def edges(self) -> list[tuple[int, int]]:
        """0-based index pairs joined by an edge."""
        out = set()
        for f in self.facet_masks:
            vs = bits(f)
            for i, a in enumerate(vs):
                for b in vs[i + 1:]:
                    out.add((a, b))
        return sorted(out)


def nerve(c: MnfComplex) -> NerveComplex:
    rows = {r for r in c.vertex_membership if r}
    maximal = [r for r in rows if not any(r != q and r & q == r for q in rows)]
    if not maximal:
        maximal = [0]
    return NerveComplex(c.m, tuple(sorted(maximal, key=normal_key)))


def facet_sets(c: MnfComplex) -> list[frozenset[int]]:
    """``F_v`` for every vertex ``v``, as 1-based non-face indices."""
    return [to_set(r) for r in c.vertex_membership]


def transpose_reconstruct(nv: NerveComplex) -> MnfComplex:
    """Rebuild the complex whose vertices are the facets of ``nv``."""
    fs = list(nv.facet_masks)
    if len(set(fs)) != len(fs):
        raise Irrecoverable("repeated facets")
    masks = []
    for j in range(nv.m):
        col = 0
        for i, f in enumerate(fs):
            if f >> j & 1:
                col |= 1 << i
        if col.bit_count() < 2:
            raise Irrecoverable(f"nerve vertex {j + 1} lies in fewer than two facets")
        masks.append(col)
    try:
        return MnfComplex.from_masks(len(fs), masks)
    except InvalidComplex as exc:
        raise Irrecoverable(str(exc)) from exc


def is_point_separating(c: MnfComplex) -> bool:
    """Every two vertices are told apart by some minimal non-face."""
    rows = c.vertex_membership
    return len(set(rows)) == len(rows)


def nerve_adjacency(c: MnfComplex) -> list[int]:
    adj = [0] * c.m
    for j, x in enumerate(c.masks):
        for k in range(j + 1, c.m):
            if x & c.masks[k]:
                adj[j] |= 1 << k
                adj[k] |= 1 << j
    return adj


def nerve_max_degree(c: MnfComplex) -> int:
    return max((a.bit_count() for a in nerve_adjacency(c)), default=0)


def matching_number(adj: list[int]) -> int:
    """Maximum matching of a small graph by branch and bound."""
    if len(adj) > 24:
        raise TooLarge("matching search is limited to 24 vertices")
    best = 0

    def go(alive: int, size: int) -> None:
        nonlocal best
        # an upper bound: every remaining edge needs two live vertices
        live_with_edges = 0
        rest = alive
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & alive:
                live_with_edges += 1
            rest ^= low
        if size + live_with_edges // 2 <= best:
            return
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            nbrs = adj[v] & alive
            if nbrs:
                break
            rest ^= low
        else:
            best = max(best, size)
            return
        # v is matched to one of nbrs, or left out
        while nbrs:
            w = nbrs & -nbrs
            go(alive & ~low & ~w, size + 1)
            nbrs ^= w
        go(alive & ~low, size)

    go((1 << len(adj)) - 1, 0)
    return best


def nerve_matching_number(c: MnfComplex) -> int:
    return matching_number(nerve_adjacency(c))


# -- unsuspension -----------------------------------------------------------


class RemoveIsolated(NamedTuple):
    vertices: tuple[int, int]  # original labels of an isolated 2-element non-face


class MergeDoubledVertex(NamedTuple):
    kept: int
    removed: int


class Unsuspension(NamedTuple):
    complex: MnfComplex
    labels: tuple[int, ...]  # original label of each surviving vertex
    log: tuple


def unsuspend(c: MnfComplex) -> Unsuspension:
    """Strip isolated non-faces and doubled vertices.

    Doubled vertices merge into the smallest label of their class.  Of the
    vertices lying in no non-face one survives, the smallest.  Log entries
    use the input's labels, in the order they were undone.
    """
    rows = c.vertex_membership
    classes: dict[int, list[int]] = {}
    for v, r in enumerate(rows):
        classes.setdefault(r, []).append(v)
    keep = c.full
    log: list = []
    for r, members in sorted(classes.items(), key=lambda kv: kv[1][0]):
        kept, extra = members[0], members[1:]
        isolated = r.bit_count() == 1 and c.masks[bits(r)[0]] == sum(1 << v for v in members)
        if isolated:
            *merged, last = extra
            for v in merged:
                log.append(MergeDoubledVertex(kept + 1, v + 1))
                keep &= ~(1 << v)
            log.append(RemoveIsolated((kept + 1, last + 1)))
            keep &= ~(1 << kept) & ~(1 << last)
        else:
            for v in extra:
                log.append(MergeDoubledVertex(kept + 1, v + 1))
                keep &= ~(1 << v)
    survivors = [x & keep for x in c.masks if x & keep]
    out, labels = compact(c.n, [x for x in survivors if x.bit_count() >= 2], keep)
    return Unsuspension(out, labels, tuple(log))


def replay(base: MnfComplex, labels, log) -> MnfComplex:
    """Redo an unsuspension log on its output, restoring the original labels."""
    c = base
    current = list(labels)  # current[i] = original label of vertex i + 1
    for entry in reversed(log):
        if isinstance(entry, MergeDoubledVertex):
            c = one_point_suspension(c, current.index(entry.kept) + 1)
            current.append(entry.removed)
        else:
            c = two_point_suspension(c)
            current.extend(entry.vertices)
    perm = [label - 1 for label in current]
    return MnfComplex.from_masks(c.n, [_remap(x, perm) for x in c.masks], check=False)


def _remap(mask: int, perm) -> int:
    out = 0
    for v in bits(mask):
        out |= 1 << perm[v]
    return out


# -- joins ------------------------------------------------------------------


class JoinFactor(NamedTuple):
    complex: MnfComplex
    labels: tuple[int, ...]


def join_decompose(c: MnfComplex) -> tuple[list[JoinFactor], JoinFactor | None]:
    """Split along the connected components of the nerve.

    Returns the factors (ordered by smallest vertex) and the full simplex
    spanned by vertices in no non-face, or ``None`` when there are none.
    """
    adj = nerve_adjacency(c)
    seen = 0
    parts = []
    for j in range(c.m):
        if seen >> j & 1:
            continue
        comp, frontier = 0, 1 << j
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            if comp & low:
                continue
            comp |= low
            frontier |= adj[low.bit_length() - 1] & ~comp
        seen |= comp
        verts = 0
        for k in bits(comp):
            verts |= c.masks[k]
        parts.append((verts, [c.masks[k] for k in bits(comp)]))
    parts.sort(key=lambda p: p[0] & -p[0])
    factors = [JoinFactor(*compact(c.n, ms, verts)) for verts, ms in parts]
    covered = 0
    for verts, _ in parts:
        covered |= verts
    free = c.full & ~covered
    simplex = JoinFactor(*compact(c.n, [], free)) if free else None
    return factors, simplex


def is_join_irreducible(c: MnfComplex) -> bool:
    factors, simplex = join_decompose(c)
    if simplex is None:
        return len(factors) <= 1
    return not factors and simplex.complex.n <= 1


# -- the pyramid pattern ------------------------------------------------------


def detect_pd_pattern(nv: NerveComplex) -> int | None:
    """Largest ``k`` such that some ``k``-simplex facet hangs off the rest by pendant edges.

    Every vertex of the simplex must have exactly one neighbour outside it,
    and that edge must itself be a facet.
    """
    adj = [0] * nv.m
    for a, b in nv.edges():
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    facetset = set(nv.facet_masks)
    best = None
    for t in nv.facet_masks:
        if t.bit_count() < 2:
            continue
        ok = True
        for a in bits(t):
            out = adj[a] & ~t
            if out.bit_count() != 1 or (out | (1 << a)) not in facetset:
                ok = False
                break
        if ok:
            k = t.bit_count() - 1
            best = k if best is None else max(best, k)
    return best


def nerve_dot(c: MnfComplex) -> str:
    """Graphviz rendering of the nerve's 1-skeleton."""
    lines = ["graph nerve {"]
    for j, x in enumerate(c.masks):
        label = "{" + ",".join(map(str, sorted_labels(x))) + "}"
        lines.append(f'  m{j + 1} [label="{label}"];')
    for j, x in enumerate(c.masks):
        for k in range(j + 1, c.m):
            shared = x & c.masks[k]
            if shared:
                label = ",".join(map(str, sorted_labels(shared)))
                lines.append(f'  m{j + 1} -- m{k + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

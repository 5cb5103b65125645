"""Canonical forms for complexes up to vertex relabeling.

The canonical form of a complex is the lexicographically least sorted list
of ``(size, mask)`` pairs over all relabelings of its vertices.  It is found
by colour refinement on the bipartite vertex/non-face incidence followed by
a backtracking search over the cells the refinement cannot split.  Two kinds
of symmetry cut the search: swapping two vertices that lie in exactly the same
non-faces is always an automorphism, and at the root any automorphism
discovered so far (two leaves with equal codes) folds its orbits together.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .complex import MnfComplex, bits, normal_key, permute_mask

Code = tuple[tuple[int, int], ...]


def _refine(cells: list[list[int]], vsets: Sequence[list[int]], mverts: Sequence[list[int]]) -> list[list[int]]:
    """Split cells until the ordered partition is equitable.

    ``vsets[v]`` lists the non-faces through vertex ``v``; ``mverts[j]`` the
    vertices of non-face ``j``.
    """
    color = [0] * len(vsets)
    while True:
        for ci, cell in enumerate(cells):
            for v in cell:
                color[v] = ci
        set_sig = [tuple(sorted([color[v] for v in vs])) for vs in mverts]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict = {}
            for v in cell:
                sig = tuple(sorted([set_sig[j] for j in vsets[v]]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _code(masks: Sequence[int], order: Sequence[int]) -> tuple[Code, list[int]]:
    perm = [0] * len(order)
    for pos, v in enumerate(order):
        perm[v] = pos
    return tuple(sorted(normal_key(permute_mask(x, perm)) for x in masks)), perm


class _Orbits:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def absorb(self, gamma: Sequence[int]) -> None:
        for v, w in enumerate(gamma):
            a, b = self.find(v), self.find(w)
            if a != b:
                self.parent[max(a, b)] = min(a, b)


def canonical_labeling(n: int, masks: Sequence[int]) -> tuple[Code, list[int]]:
    """Return ``(code, perm)`` with ``perm[old] = new`` (both 0-based)."""
    masks = list(masks)
    rows = [0] * n
    for j, x in enumerate(masks):
        for v in bits(x):
            rows[v] |= 1 << j
    if n == 0:
        return (), []
    vsets = [bits(r) for r in rows]
    mverts = [bits(x) for x in masks]
    cells = _refine([list(range(n))], vsets, mverts)

    best: list = [None, None]  # code, perm
    orbits = _Orbits(n)

    def leaf(cells: list[list[int]]) -> None:
        code, perm = _code(masks, [c[0] for c in cells])
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, perm
        elif code == best[0]:
            # perm and best perm send masks to the same family: an automorphism
            inv = [0] * n
            for v, p in enumerate(best[1]):
                inv[p] = v
            orbits.absorb([inv[perm[v]] for v in range(n)])

    def search(cells: list[list[int]], root: bool) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        tried_rows: set[int] = set()
        tried: list[int] = []
        for v in cell:
            if rows[v] in tried_rows:
                continue
            if root and any(orbits.find(v) == orbits.find(u) for u in tried):
                continue
            tried_rows.add(rows[v])
            tried.append(v)
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(split, vsets, mverts), root=False)

    search(cells, root=True)
    return best[0], best[1]


def _encode(n: int, code: Code) -> bytes:
    width = max(1, (n + 7) // 8)
    out = bytearray()
    out += n.to_bytes(2, "big")
    out += len(code).to_bytes(2, "big")
    for _, mask in code:
        out += mask.to_bytes(width, "big")
    return bytes(out)


def canonical_key(c: MnfComplex) -> bytes:
    """Label-independent key: equal exactly for isomorphic complexes."""
    code, _ = canonical_labeling(c.n, c.masks)
    return _encode(c.n, code)


def key_of(n: int, masks: Sequence[int]) -> bytes:
    return _encode(n, canonical_labeling(n, masks)[0])


def canonical_form(c: MnfComplex) -> MnfComplex:
    code, _ = canonical_labeling(c.n, c.masks)
    return MnfComplex(c.n, tuple(mask for _, mask in code))


def are_isomorphic(a: MnfComplex, b: MnfComplex) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_key(a) == canonical_key(b)


def brute_force_key(c: MnfComplex) -> bytes:
    """Minimum code over all ``n!`` relabelings; the slow reference."""
    best = None
    for perm in permutations(range(c.n)):
        code = tuple(sorted(normal_key(permute_mask(x, perm)) for x in c.masks))
        if best is None or code < best:
            best = code
    return _encode(c.n, best if best is not None else ())

"""Slow, independent reference implementations used only by the tests.

Nothing here imports the library's algorithms: faces come from scanning all
subsets, ranks from dense Fraction elimination, interval homology from
explicit chain enumeration, isomorphism from trying every permutation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def subsets(n):
    for k in range(n + 1):
        for c in combinations(range(1, n + 1), k):
            yield frozenset(c)


def brute_faces(n, mnf):
    mnf = [frozenset(m) for m in mnf]
    return [s for s in subsets(n) if not any(m <= s for m in mnf)]


def brute_facets(n, mnf):
    faces = brute_faces(n, mnf)
    return {f for f in faces if not any(f < g for g in faces)}


def dense_rank(matrix, p=None):
    """Rank of a list-of-lists matrix over Q (p=None) or GF(p)."""
    if p is None:
        rows = [[Fraction(x) for x in r] for r in matrix]
    else:
        rows = [[x % p for x in r] for r in matrix]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                if p is None:
                    f = rows[i][col] / rows[rank][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
                else:
                    f = rows[i][col] * pow(rows[rank][col], -1, p) % p
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def betti_from_faces(faces, p=None):
    """Reduced Betti numbers b_{-1}.. of an abstract complex given by all its faces."""
    faces = [tuple(sorted(f)) for f in faces]
    top = max(len(f) for f in faces)
    by = {k: sorted(f for f in faces if len(f) == k) for k in range(top + 1)}
    rank = {}
    for k in range(1, top + 1):
        lower = {f: i for i, f in enumerate(by[k - 1])}
        mat = []
        for f in by[k]:
            row = [0] * len(lower)
            for pos in range(len(f)):
                row[lower[f[:pos] + f[pos + 1:]]] = (-1) ** pos
            mat.append(row)
        rank[k] = dense_rank(mat, p) if mat and lower else 0
    rank[top + 1] = 0
    return [len(by[k]) - rank.get(k, 0) - rank[k + 1] for k in range(top + 1)]


def brute_lattice(mnf):
    mnf = [frozenset(m) for m in mnf]
    out = set()
    for k in range(len(mnf) + 1):
        for combo in combinations(mnf, k):
            out.add(frozenset().union(*combo))
    return out


def chain_homology(mnf, s, p=None):
    """h_{-2}, h_{-1}, h_0, ... of the open interval (∅, S), enumerating chains."""
    s = frozenset(s)
    lat = brute_lattice(mnf)
    if s not in lat:
        return None
    if not s:
        return [1]
    inner = [a for a in lat if a and a < s]
    chains = [()]
    frontier = [(a,) for a in inner]
    while frontier:
        chains.extend(frontier)
        frontier = [c + (b,) for c in frontier for b in inner if c[-1] < b]
    # vertices are lattice elements; encode as indices
    idx = {a: i for i, a in enumerate(inner)}
    faces = [tuple(sorted(idx[a] for a in c)) for c in chains]
    return [0] + betti_from_faces(faces, p)


def relabel_mnf(mnf, perm):
    """perm maps label -> label (1-based dict or tuple with perm[v-1])."""
    return [frozenset(perm[v - 1] for v in m) for m in mnf]


def perm_key(n, mnf):
    """Lexicographically least sorted incidence over all n! relabelings."""
    best = None
    for perm in permutations(range(1, n + 1)):
        img = sorted(tuple(sorted(m)) for m in relabel_mnf(mnf, perm))
        img = sorted(img, key=lambda t: (len(t), t))
        if best is None or img < best:
            best = img
    return (n, tuple(best or ()))


_TABLES = {}


def _perm_tables(n):
    """For every permutation of [n], its action on all 2^n bitmasks."""
    if n not in _TABLES:
        tables = []
        for perm in permutations(range(n)):
            tab = []
            for x in range(1 << n):
                y = 0
                for v in range(n):
                    if x >> v & 1:
                        y |= 1 << perm[v]
                tab.append(y)
            tables.append(tab)
        _TABLES[n] = tables
    return _TABLES[n]


def perm_key_masks(n, masks):
    """Same idea as perm_key on bitmasks, table driven; fine up to n = 6."""
    best = None
    for tab in _perm_tables(n):
        img = tuple(sorted((bin(tab[x]).count("1"), tab[x]) for x in masks))
        if best is None or img < best:
            best = img
    return (n, best)


def antichains(n, m_max):
    """All antichains of 2+-subsets of [n] with at most m_max members."""
    universe = [s for s in subsets(n) if len(s) >= 2]

    def grow(start, chosen):
        yield list(chosen)
        if len(chosen) == m_max:
            return
        for i in range(start, len(universe)):
            s = universe[i]
            if any(c <= s or s <= c for c in chosen):
                continue
            chosen.append(s)
            yield from grow(i + 1, chosen)
            chosen.pop()

    yield from grow(0, [])


def is_sphere_brute(n, mnf, p=None):
    """Homology sphere test from the definition, links built by brute force."""
    faces = brute_faces(n, mnf)
    facets = [f for f in faces if not any(f < g for g in faces)]
    if n == 0:
        return True
    if len({len(f) for f in facets}) != 1:
        return False
    d = len(facets[0])
    for f in faces:
        link = [g - f for g in faces if f <= g]
        e = d - 1 - len(f)
        b = betti_from_faces(link, p)
        if b != [1 if i - 1 == e else 0 for i in range(len(b))]:
            return False
    return True


def hochster_table(n, mnf, p=None):
    """Multigraded Betti numbers from induced subcomplexes: {(i, S): beta}."""
    faces = brute_faces(n, mnf)
    out = {}
    for s in subsets(n):
        sub = [f for f in faces if f <= s]
        b = betti_from_faces(sub, p)  # b[k] is reduced H_{k-1}
        for k, v in enumerate(b):
            i = len(s) - k  # H_{|S|-i-1} = H_{k-1}
            if v:
                out[(i, s)] = v
    return out

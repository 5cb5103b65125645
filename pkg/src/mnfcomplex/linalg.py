"""Exact matrix rank over GF(2), GF(p) and the rationals.

Rows are sparse: over GF(2) a row is an ``int`` whose set bits are the
non-zero columns; otherwise it is a ``dict`` mapping column to entry.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def rank_gf2(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}  # leading bit -> reduced row
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            row ^= p
    return len(pivots)


def rank_mod_p(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}  # leading column -> monic row
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def rank_rational(rows: Iterable[dict[int, int]]) -> int:
    """Fraction-free elimination; rows are kept primitive to curb growth."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            new: dict[int, int] = {}
            for c in set(row) | set(piv):
                v = a * row.get(c, 0) - b * piv.get(c, 0)
                if v:
                    new[c] = v
            row = _primitive(new) if new else new
    return len(pivots)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}

"""Text formats: complex files, analysis reports, census streams.

A complex file looks like::

    # pentagon
    n 5
    1 3
    1 4
    ...

The first non-comment line gives the ground-set size, every further line one
minimal non-face as 1-based labels.  ``#`` starts a comment anywhere.
"""

from __future__ import annotations

import json
from typing import Iterable

from .complex import MnfComplex, alpha, f_vector, is_pure, new_complex, sorted_labels
from .errors import InvalidComplex, ParseError, RangeViolation
from .homology import GF2, FieldSpec, is_cone, is_homology_sphere, reduced_betti
from .lcm import betti_table, build_lattice, check_duality
from .nerve import (
    facet_sets,
    is_point_separating,
    join_decompose,
    nerve,
    nerve_matching_number,
    nerve_max_degree,
    unsuspend,
)


def parse_complex(text: str) -> MnfComplex:
    n = None
    sets: list[list[int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if n is None:
            if len(words) != 2 or words[0] != "n" or not words[1].isdigit():
                raise ParseError(f"expected 'n <integer>', got {line!r}", lineno)
            n = int(words[1])
            continue
        try:
            labels = [int(w) for w in words]
        except ValueError:
            bad = next(w for w in words if not w.lstrip("-").isdigit())
            raise ParseError(f"vertex label {bad!r} is not an integer", lineno) from None
        for v in labels:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno)
        sets.append(labels)
        lines.append(lineno)
    if n is None:
        raise ParseError("missing 'n <integer>' line")
    try:
        return new_complex(n, sets)
    except (InvalidComplex, RangeViolation) as exc:
        raise ParseError(str(exc)) from exc


def read_complex(path: str) -> MnfComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def format_complex(c: MnfComplex, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {c.n}")
    out.extend(" ".join(map(str, sorted_labels(x))) for x in c.masks)
    return "\n".join(out) + "\n"


def _labels(sets: Iterable) -> list[list[int]]:
    return [sorted(s) for s in sets]


def analysis_report(c: MnfComplex, field: FieldSpec = GF2, skip_lcm: bool = False) -> dict:
    """Every invariant the library computes, as a JSON-ready dict of integers, lists and bools."""
    factors, free = join_decompose(c)
    join_factors = [
        {"vertices": list(f.labels), "mnf": [[f.labels[v - 1] for v in sorted_labels(x)] for x in f.complex.masks]}
        for f in factors
    ]
    if free is not None:
        join_factors.append({"vertices": list(free.labels), "mnf": []})
    nv = nerve(c)
    report = {
        "n": c.n,
        "d": c.d,
        "m": c.m,
        "alpha": alpha(c),
        "f_vector": f_vector(c),
        "facets": [sorted_labels(f) for f in c.facet_masks],
        "is_pure": is_pure(c),
        "is_cone": is_cone(c),
        "point_separating": is_point_separating(c),
        "unsuspended": not unsuspend(c).log,
        "join_factors": join_factors,
        "homology": {
            "field": field.name,
            "reduced_betti": reduced_betti(c, field),
            "is_homology_sphere": is_homology_sphere(c, field),
        },
        "nerve": {
            "dim": nv.dim,
            "max_degree": nerve_max_degree(c),
            "matching_number": nerve_matching_number(c),
            "facet_sets": _labels(facet_sets(c)),
        },
    }
    if not skip_lcm:
        violations = check_duality(c, field)
        report["lcm"] = {
            "size": len(build_lattice(c)),
            "total_betti": betti_table(c, field).total(),
            "duality_ok": not violations,
            "violations": [
                {"i": v.i, "S": sorted(v.s), "left": v.left, "right": v.right} for v in violations
            ],
        }
    return report


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def format_log(entries) -> str:
    from .nerve import MergeDoubledVertex

    out = []
    for e in entries:
        if isinstance(e, MergeDoubledVertex):
            out.append(f"merge {e.kept} {e.removed}")
        else:
            out.append(f"remove-isolated {e.vertices[0]} {e.vertices[1]}")
    return "\n".join(out) + ("\n" if out else "")

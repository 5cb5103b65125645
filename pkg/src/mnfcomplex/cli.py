"""Command line entry point: ``mnfcomplex <command> ...``.

Exit codes: 0 success, 1 an internal size limit was hit, 2 bad usage or
unparsable input.  ``iso`` exits 1 when the complexes differ.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import constructions as cons
from .canonical import are_isomorphic
from .census import RULES, CensusConfig, enumerate_census, resume
from .errors import (
    BoundsExceeded,
    CheckpointCorrupt,
    ConfigMismatch,
    InvalidParameter,
    ParseError,
    TooLarge,
)
from .homology import FieldSpec
from .io import analysis_report, dumps_report, format_complex, format_log, read_complex
from .nerve import nerve_dot, unsuspend

FAMILIES = {
    "simplex": (cons.simplex_boundary, 1),
    "cross": (cons.cross_polytope, 1),
    "pd": (cons.pd_sphere, 1),
    "cyclic": (cons.cyclic_boundary, 2),
    "codim3": (cons.codim3_sphere, 1),
    "cross-minus-facet": (cons.cross_minus_facet, 1),
}


class _Usage(Exception):
    pass


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def cmd_analyze(args) -> int:
    c = read_complex(args.path)
    sys.stdout.write(dumps_report(analysis_report(c, args.field, skip_lcm=args.skip_lcm)))
    return 0


def cmd_gen(args) -> int:
    fn, arity = FAMILIES[args.family]
    if len(args.params) != arity:
        raise _Usage(f"{args.family} takes {arity} integer parameter(s)")
    try:
        c = fn(*args.params)
    except InvalidParameter as exc:
        raise _Usage(str(exc)) from exc
    sys.stdout.write(format_complex(c))
    return 0


def cmd_iso(args) -> int:
    return 0 if are_isomorphic(read_complex(args.a), read_complex(args.b)) else 1


def cmd_unsuspend(args) -> int:
    res = unsuspend(read_complex(args.path))
    sys.stdout.write(format_complex(res.complex))
    text = format_log(res.log)
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stderr.write(text)
    return 0


def cmd_nerve(args) -> int:
    c = read_complex(args.path)
    if args.dot:
        sys.stdout.write(nerve_dot(c))
    else:
        rep = analysis_report(c, skip_lcm=True)["nerve"]
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    return 0


def cmd_census(args) -> int:
    if args.codim3:
        mode = "codim3"
    elif args.spheres:
        mode = "spheres"
    else:
        mode = "all"
    cfg = CensusConfig(
        n_max=args.n_max,
        m_max=args.m_max,
        field=args.field,
        mode=mode,
        require_unsuspended=args.unsuspended,
        require_join_irreducible=args.join_irreducible,
        checkpoint_path=args.checkpoint,
        n_min=args.n_min,
        disabled_rules=frozenset(args.disable_rule or ()),
        threads=args.threads,
    )
    lines: list[str] = []

    def sink(rec):
        lines.append(rec.to_json() + "\n")

    if args.resume:
        if not args.checkpoint:
            raise _Usage("--resume needs --checkpoint")
        summary = resume(args.checkpoint, cfg, sink)
    else:
        summary = enumerate_census(cfg, sink)
    text = "".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    sys.stderr.write(json.dumps(summary.as_dict(), sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mnfcomplex", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report every invariant of a complex file")
    a.add_argument("path")
    a.add_argument("--field", type=_field, default=FieldSpec(2), help="gf2, gf<p> or rat")
    a.add_argument("--skip-lcm", action="store_true")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gen", help="print a named family member")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("params", type=int, nargs="*")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("census", help="isomorph-free search; JSONL records sorted by key")
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--m-max", type=int, required=True)
    c.add_argument("--n-min", type=int, default=1)
    c.add_argument("--spheres", action="store_true", help="homology spheres only")
    c.add_argument("--codim3", action="store_true", help="homology spheres with n - d = 3")
    c.add_argument("--unsuspended", action="store_true")
    c.add_argument("--join-irreducible", action="store_true")
    c.add_argument("--field", type=_field, default=FieldSpec(2))
    c.add_argument("--out")
    c.add_argument("--checkpoint")
    c.add_argument("--resume", action="store_true")
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--disable-rule", action="append", choices=RULES)
    c.set_defaults(func=cmd_census)

    i = sub.add_parser("iso", help="exit 0 when two complex files are isomorphic")
    i.add_argument("a")
    i.add_argument("b")
    i.set_defaults(func=cmd_iso)

    u = sub.add_parser("unsuspend", help="print the unsuspended core; the log goes to stderr")
    u.add_argument("path")
    u.add_argument("--log", help="write the log here instead")
    u.set_defaults(func=cmd_unsuspend)

    nv = sub.add_parser("nerve", help="nerve statistics, or a DOT graph with --dot")
    nv.add_argument("path")
    nv.add_argument("--dot", action="store_true")
    nv.set_defaults(func=cmd_nerve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, _Usage, BoundsExceeded, ConfigMismatch, CheckpointCorrupt) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except TooLarge as exc:
        sys.stderr.write(f"limit: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Isomorph-free exhaustive search over minimal non-face configurations.

For each ground-set size ``n`` the search grows antichains of vertex sets
one set at a time, never adding a set smaller than one already present.
Isomorph rejection is by canonical augmentation: a child ``Y = X + s`` is
kept only if deleting the set that comes last under ``Y``'s canonical
labeling gives back (a copy of) ``X``, and children of one parent are
deduplicated by canonical key.  Every isomorphism class is therefore
reached from exactly one parent.

Pruning rules are necessary conditions on the final object.  Each can be
switched off through :attr:`CensusConfig.disabled_rules`; switching one off
only enlarges the tree, never the output.

``point-separating``
    the unsuspended filter (checked at the leaves).
``cone``
    every vertex of a homology sphere lies in a minimal non-face.
``nerve-degree``
    a non-face of a homology sphere meets at most ``α`` others.  Interior
    nodes use ``α <= m_max - τ`` where ``τ`` is the current minimum
    blocking-set size, which can only grow.
``matching``
    the matching number of the nerve graph is at most ``α``.
``complement-closure``
    the complement of each non-face of a homology sphere is a union of
    non-faces.  Interior nodes check it for complements too small to receive
    any later (larger) set.
``alpha-bound``
    an unsuspended homology sphere has ``m <= 2α + (2α)^α``.

With a fixed codimension ``c = n - d`` two further cuts always apply: no set
larger than ``n - c + 1`` is tried, and a node whose minimum blocking set
exceeds ``c`` is dead.

The tree is cut at ``split_depth`` into independent tasks, which may run in
worker processes and are recorded in the checkpoint as they finish.  Output
is sorted by canonical key, so it does not depend on scheduling.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .canonical import canonical_labeling, key_of, _encode
from .complex import MnfComplex, bits, normal_key, permute_mask, sorted_labels
from .errors import BoundsExceeded, CheckpointCorrupt, ConfigMismatch
from .homology import GF2, FieldSpec, is_homology_sphere
from .nerve import is_join_irreducible, is_point_separating, matching_number, unsuspend

log = logging.getLogger(__name__)

MODES = ("all", "spheres", "codim3")
RULES = ("point-separating", "cone", "nerve-degree", "matching", "complement-closure", "alpha-bound")
CHECKPOINT_FORMAT = "mnfcomplex-census-checkpoint"
CHECKPOINT_VERSION = 1
DESK_LIMIT = 10


@dataclass(frozen=True)
class CensusConfig:
    n_max: int
    m_max: int
    field: FieldSpec = GF2
    mode: str = "spheres"
    require_unsuspended: bool = False
    require_join_irreducible: bool = False
    checkpoint_path: str | None = None
    codim: int | None = None
    n_min: int = 1
    disabled_rules: frozenset = frozenset()
    split_depth: int = 2
    threads: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.n_max > DESK_LIMIT or self.m_max > DESK_LIMIT:
            raise BoundsExceeded(f"n_max and m_max are limited to {DESK_LIMIT}")
        if self.n_max < 0 or self.m_max < 0 or self.n_min < 0:
            raise BoundsExceeded("bounds must be non-negative")
        unknown = set(self.disabled_rules) - set(RULES)
        if unknown:
            raise ValueError(f"unknown pruning rules {sorted(unknown)}")
        object.__setattr__(self, "disabled_rules", frozenset(self.disabled_rules))
        if self.mode == "codim3" and self.codim is None:
            object.__setattr__(self, "codim", 3)

    @property
    def spheres_only(self) -> bool:
        return self.mode != "all"

    def rule(self, name: str) -> bool:
        return name not in self.disabled_rules

    def fingerprint(self) -> dict:
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "field": self.field.name,
            "mode": self.mode,
            "require_unsuspended": self.require_unsuspended,
            "require_join_irreducible": self.require_join_irreducible,
            "codim": self.codim,
            "n_min": self.n_min,
            "disabled_rules": sorted(self.disabled_rules),
            "split_depth": self.split_depth,
        }

    def config_hash(self) -> str:
        blob = json.dumps(self.fingerprint(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class CensusRecord:
    key: str
    n: int
    d: int
    m: int
    alpha: int
    flags: dict
    mnf: list

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "CensusRecord":
        return cls(obj["key"], obj["n"], obj["d"], obj["m"], obj["alpha"], dict(obj["flags"]),
                   [list(s) for s in obj["mnf"]])

    @property
    def complex(self) -> MnfComplex:
        from .complex import new_complex
        return new_complex(self.n, self.mnf)


@dataclass
class CensusSummary:
    counts: dict = field(default_factory=dict)  # "n,m,alpha" -> count
    records: int = 0
    nodes: int = 0
    tasks: int = 0
    tasks_done: int = 0
    seconds: float = 0.0
    complete: bool = True

    def as_dict(self) -> dict:
        return {
            "records": self.records,
            "counts": dict(sorted(self.counts.items())),
            "nodes": self.nodes,
            "tasks": self.tasks,
            "tasks_done": self.tasks_done,
            "milliseconds": round(self.seconds * 1000),
            "complete": self.complete,
        }


# -- small combinatorial helpers ----------------------------------------------


def min_transversal(masks: Iterable[int]) -> int:
    """Size of a smallest vertex set meeting every mask."""
    ms = list(masks)
    best = [len(ms)]

    def go(sets: list[int], used: int) -> None:
        if used >= best[0]:
            return
        if not sets:
            best[0] = used
            return
        pivot = min(sets, key=lambda x: x.bit_count())
        for v in bits(pivot):
            b = 1 << v
            go([x for x in sets if not x & b], used + 1)

    go(ms, 0)
    return best[0]


def _adjacency(masks) -> list[int]:
    m = len(masks)
    adj = [0] * m
    for j in range(m):
        for k in range(j + 1, m):
            if masks[j] & masks[k]:
                adj[j] |= 1 << k
                adj[k] |= 1 << j
    return adj


def _is_union_of_members(target: int, masks) -> bool:
    u = 0
    for x in masks:
        if x & target == x:
            u |= x
    return u == target


# -- the search ---------------------------------------------------------------


class _Search:
    """One worker's view of the tree; the config is shared read-only."""

    def __init__(self, cfg: CensusConfig):
        self.cfg = cfg
        self.nodes = 0
        self._universe: dict[int, list[int]] = {}
        self._bitcache: dict[int, list[int]] = {}

    def universe(self, n: int) -> list[int]:
        u = self._universe.get(n)
        if u is None:
            u = sorted((s for s in range(1 << n) if s.bit_count() >= 2), key=normal_key)
            self._universe[n] = u
        return u

    # interior pruning: True when neither this node nor any descendant can be emitted
    def dead(self, n: int, masks: tuple[int, ...]) -> bool:
        cfg = self.cfg
        if not masks:
            return False
        if cfg.codim is not None or (cfg.spheres_only and (cfg.rule("nerve-degree") or cfg.rule("matching"))):
            tau = min_transversal(masks)
            if cfg.codim is not None and tau > cfg.codim:
                return True
            if cfg.spheres_only:
                # the final alpha is m - codim, and the codimension is at least tau
                room = cfg.m_max - (tau if cfg.codim is None else cfg.codim)
                adj = _adjacency(masks)
                if cfg.rule("nerve-degree") and max(a.bit_count() for a in adj) > room:
                    return True
                if cfg.rule("matching") and len(masks) >= 2 and matching_number(adj) > room:
                    return True
        if cfg.spheres_only and cfg.rule("complement-closure"):
            full = (1 << n) - 1
            k = masks[-1].bit_count()
            for x in masks:
                comp = full & ~x
                if comp.bit_count() < k and not _is_union_of_members(comp, masks):
                    return True
        return False

    def cheap_reject(self, n: int, masks: tuple[int, ...]) -> bool:
        """Label-invariant leaf filters that are quick to evaluate."""
        cfg = self.cfg
        full = (1 << n) - 1
        if cfg.require_unsuspended and cfg.rule("point-separating"):
            rows = [0] * n
            for j, x in enumerate(masks):
                for v in bits(x):
                    rows[v] |= 1 << j
            if len(set(rows)) != n:
                return True
        if not cfg.spheres_only:
            return False
        covered = 0
        for x in masks:
            covered |= x
        if cfg.rule("cone") and n > 0 and covered != full:
            return True
        if cfg.rule("complement-closure"):
            for x in masks:
                if not _is_union_of_members(full & ~x, masks):
                    return True
        return False

    def emit(self, n: int, masks: tuple[int, ...], key: bytes, code) -> CensusRecord | None:
        cfg = self.cfg
        if self.cheap_reject(n, masks):
            return None
        c = MnfComplex.from_masks(n, masks, check=False)
        a = c.m - (c.n - c.d)
        if cfg.codim is not None and c.n - c.d != cfg.codim:
            return None
        if cfg.spheres_only:
            if cfg.rule("nerve-degree") or cfg.rule("matching"):
                adj = _adjacency(c.masks)
                if cfg.rule("nerve-degree") and max((x.bit_count() for x in adj), default=0) > a:
                    return None
                if cfg.rule("matching") and matching_number(adj) > a:
                    return None
            if cfg.require_unsuspended and cfg.rule("alpha-bound") and c.m > 2 * a + (2 * a) ** a:
                return None
        unsuspended = not unsuspend(c).log
        if cfg.require_unsuspended and not unsuspended:
            return None
        irreducible = is_join_irreducible(c)
        if cfg.require_join_irreducible and not irreducible:
            return None
        sphere = is_homology_sphere(c, cfg.field)
        if cfg.spheres_only and not sphere:
            return None
        flags = {
            "homology_sphere": sphere,
            "unsuspended": unsuspended,
            "join_irreducible": irreducible,
            "point_separating": is_point_separating(c),
        }
        mnf = [sorted_labels(mask) for _, mask in code]
        return CensusRecord(key.hex(), c.n, c.d, c.m, a, flags, mnf)

    def children(self, n: int, masks: tuple[int, ...], key: bytes):
        """Accepted children of a node, sorted by key: ``(masks, key, code)``.

        A child ``Y = X + s`` is kept when ``s`` lies in the orbit of the
        canonical deletion ``t`` of ``Y``: among the largest sets with the
        highest cheap invariant, the one the canonical labeling puts last.
        Most candidates fail the invariant comparison before any labeling.
        """
        cfg = self.cfg
        k = masks[-1].bit_count() if masks else 2
        leaf_level = len(masks) + 1 >= cfg.m_max
        deg = [0] * n
        for x in masks:
            for v in self._bits(x):
                deg[v] += 1
        # a non-face minus any vertex is a face, so it has at most d + 1 vertices
        cap = n if cfg.codim is None else n - cfg.codim + 1
        found: dict[bytes, tuple] = {}
        for s in self.universe(n):
            size = s.bit_count()
            if size < k:
                continue
            if size > cap:
                break
            if any(x & s == x for x in masks):
                continue
            top = [x for x in masks if x.bit_count() == size] + [s]
            invs = [self._invariant(x, masks, s, deg) for x in top]
            best = max(invs)
            if invs[-1] != best:
                continue
            ys = tuple(sorted(masks + (s,), key=normal_key))
            if self.dead(n, ys):
                continue
            if leaf_level and self.cheap_reject(n, ys):
                continue
            code, perm = canonical_labeling(n, ys)
            t = max((x for x, inv in zip(top, invs) if inv == best),
                    key=lambda x: normal_key(permute_mask(x, perm)))
            if t != s:
                rest = tuple(y for y in ys if y != t)
                if key_of(n, rest) != key:
                    continue
            ykey = _encode(n, code)
            if ykey not in found:
                found[ykey] = (ys, ykey, code)
        return [found[k_] for k_ in sorted(found)]

    def _bits(self, x: int) -> list[int]:
        b = self._bitcache.get(x)
        if b is None:
            b = self._bitcache[x] = bits(x)
        return b

    def _invariant(self, x: int, masks: tuple[int, ...], s: int, deg: list[int]) -> tuple:
        """Label-free summary of set ``x`` inside ``masks + (s,)``."""
        meets = sum(1 for y in masks if y & x and y != x) + (1 if s != x and s & x else 0)
        return (meets, tuple(sorted([deg[v] + (s >> v & 1) for v in self._bits(x)])))

    def subtree(self, n: int, masks: tuple[int, ...], key: bytes, code, out: list) -> None:
        self.nodes += 1
        rec = self.emit(n, masks, key, code)
        if rec is not None:
            out.append(rec)
        if len(masks) >= self.cfg.m_max:
            return
        for ys, ykey, ycode in self.children(n, masks, key):
            self.subtree(n, ys, ykey, ycode, out)

    def top(self) -> tuple[list, list]:
        """Walk every tree down to the split depth.

        Returns the records found above the cut and the task list.
        """
        cfg = self.cfg
        records: list = []
        tasks: list = []
        for n in range(cfg.n_min, cfg.n_max + 1):
            code, _ = canonical_labeling(n, ())
            frontier = [((), _encode(n, code), code)]
            depth = 0
            while frontier:
                if depth == cfg.split_depth:
                    tasks.extend((n, ms, ky) for ms, ky, _ in frontier)
                    break
                nxt = []
                for ms, ky, cd in frontier:
                    self.nodes += 1
                    rec = self.emit(n, ms, ky, cd)
                    if rec is not None:
                        records.append(rec)
                    if len(ms) < cfg.m_max:
                        nxt.extend(self.children(n, ms, ky))
                frontier = nxt
                depth += 1
        return records, tasks


def _run_task(cfg: CensusConfig, task) -> tuple[list, int]:
    n, masks, key = task
    search = _Search(cfg)
    code, _ = canonical_labeling(n, masks)
    out: list = []
    search.subtree(n, tuple(masks), bytes.fromhex(key) if isinstance(key, str) else key, code, out)
    return out, search.nodes


# -- checkpoints --------------------------------------------------------------


def _write_checkpoint(path: str, cfg: CensusConfig, n_tasks: int, done: dict[int, list]) -> None:
    bitmap = "".join("1" if i in done else "0" for i in range(n_tasks))
    tmp = f"{path}.tmp"
    count = 0
    with open(tmp, "w", encoding="utf-8") as fh:
        header = {"format": CHECKPOINT_FORMAT, "version": CHECKPOINT_VERSION,
                  "config_hash": cfg.config_hash(), "config": cfg.fingerprint(), "n_tasks": n_tasks}
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        fh.write(json.dumps({"completed": bitmap}) + "\n")
        for i in sorted(done):
            for rec in done[i]:
                fh.write(json.dumps({"task": i, "record": asdict(rec)}, sort_keys=True) + "\n")
                count += 1
        fh.write(json.dumps({"end": True, "records": count}) + "\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def read_checkpoint(path: str) -> tuple[dict, dict[int, list]]:
    """Parse a checkpoint; returns ``(header, completed task -> records)``."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise CheckpointCorrupt(f"cannot read checkpoint: {exc}") from exc
    try:
        if lines and lines[-1] == "":
            lines.pop()
        header = json.loads(lines[0])
        if header.get("format") != CHECKPOINT_FORMAT or header.get("version") != CHECKPOINT_VERSION:
            raise CheckpointCorrupt("not a census checkpoint of this version")
        bitmap = json.loads(lines[1])["completed"]
        if len(bitmap) != header["n_tasks"] or set(bitmap) - {"0", "1"}:
            raise CheckpointCorrupt("bad completion bitmap")
        trailer = json.loads(lines[-1])
        if trailer.get("end") is not True or trailer.get("records") != len(lines) - 3:
            raise CheckpointCorrupt("checkpoint is truncated")
        done = {i: [] for i, b in enumerate(bitmap) if b == "1"}
        for line in lines[2:-1]:
            obj = json.loads(line)
            if obj["task"] not in done:
                raise CheckpointCorrupt("record for a task not marked complete")
            done[obj["task"]].append(CensusRecord.from_dict(obj["record"]))
    except CheckpointCorrupt:
        raise
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise CheckpointCorrupt(f"unreadable checkpoint: {exc}") from exc
    return header, done


# -- entry points -----------------------------------------------------------


Sink = Callable[[CensusRecord], None]


def enumerate_census(cfg: CensusConfig, sink: Sink | None = None, *,
                     stop_after_tasks: int | None = None,
                     _resume: dict[int, list] | None = None) -> CensusSummary:
    """Run the search and hand every record to ``sink`` in canonical-key order.

    ``stop_after_tasks`` abandons the run after that many new tasks have
    finished (the checkpoint then allows :func:`resume`); nothing reaches the
    sink for an incomplete run.
    """
    t0 = time.perf_counter()
    search = _Search(cfg)
    top_records, tasks = search.top()
    summary = CensusSummary(nodes=search.nodes, tasks=len(tasks))
    done: dict[int, list] = dict(_resume or {})
    pending = [i for i in range(len(tasks)) if i not in done]
    log.info("census: %d tasks, %d already complete", len(tasks), len(done))

    def finished(i: int, recs: list, nodes: int) -> None:
        done[i] = recs
        summary.nodes += nodes
        log.info("task %d of %d finished: %d nodes, %d records", i + 1, len(tasks), nodes, len(recs))
        if cfg.checkpoint_path:
            _write_checkpoint(cfg.checkpoint_path, cfg, len(tasks), done)

    if cfg.checkpoint_path and not done:
        _write_checkpoint(cfg.checkpoint_path, cfg, len(tasks), done)
    budget = len(pending) if stop_after_tasks is None else min(stop_after_tasks, len(pending))
    todo = pending[:budget]
    if cfg.threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            futures = {i: pool.submit(_run_task, cfg, tasks[i]) for i in todo}
            for i in todo:
                recs, nodes = futures[i].result()
                finished(i, recs, nodes)
    else:
        for i in todo:
            recs, nodes = _run_task(cfg, tasks[i])
            finished(i, recs, nodes)

    summary.tasks_done = len(done)
    summary.complete = len(done) == len(tasks)
    summary.seconds = time.perf_counter() - t0
    if not summary.complete:
        return summary

    merged: dict[str, CensusRecord] = {}
    for rec in top_records + [r for i in sorted(done) for r in done[i]]:
        merged.setdefault(rec.key, rec)  # safety net; the search should never repeat a class
    for key in sorted(merged):
        rec = merged[key]
        tag = f"{rec.n},{rec.m},{rec.alpha}"
        summary.counts[tag] = summary.counts.get(tag, 0) + 1
        if sink is not None:
            sink(rec)
    summary.records = len(merged)
    return summary


def resume(checkpoint_path: str, cfg: CensusConfig | None = None, sink: Sink | None = None,
           *, stop_after_tasks: int | None = None) -> CensusSummary:
    header, done = read_checkpoint(checkpoint_path)
    if cfg is None:
        fp = header["config"]
        cfg = CensusConfig(
            n_max=fp["n_max"], m_max=fp["m_max"], field=FieldSpec.parse(fp["field"]),
            mode=fp["mode"], require_unsuspended=fp["require_unsuspended"],
            require_join_irreducible=fp["require_join_irreducible"], codim=fp["codim"],
            n_min=fp["n_min"], disabled_rules=frozenset(fp["disabled_rules"]),
            split_depth=fp["split_depth"], checkpoint_path=checkpoint_path,
        )
    elif cfg.config_hash() != header["config_hash"]:
        raise ConfigMismatch("checkpoint was written for a different configuration")
    if cfg.checkpoint_path != checkpoint_path:
        cfg = _replace(cfg, checkpoint_path=checkpoint_path)
    return enumerate_census(cfg, sink, stop_after_tasks=stop_after_tasks, _resume=done)


def _replace(cfg: CensusConfig, **changes) -> CensusConfig:
    from dataclasses import replace
    return replace(cfg, **changes)


def collect(cfg: CensusConfig) -> tuple[list[CensusRecord], CensusSummary]:
    out: list[CensusRecord] = []
    summary = enumerate_census(cfg, out.append)
    return out, summary


def census_codim3(n_max: int, field: FieldSpec = GF2, m_max: int = DESK_LIMIT) -> list[CensusRecord]:
    """Unsuspended homology spheres with ``n - d = 3`` on at most ``n_max`` vertices."""
    cfg = CensusConfig(n_max=n_max, m_max=m_max, field=field, mode="codim3", require_unsuspended=True)
    return collect(cfg)[0]


@dataclass
class Codim2Report:
    records: list
    decompositions: dict  # key -> list of factor sizes (n of each factor)
    all_simplex_joins: bool
    any_unsuspended: bool


def census_codim2(n_max: int, field: FieldSpec = GF2, m_max: int = DESK_LIMIT) -> Codim2Report:
    """All homology spheres with ``n - d = 2``, each checked to be a join of two simplex boundaries."""
    from .nerve import join_decompose

    cfg = CensusConfig(n_max=n_max, m_max=m_max, field=field, mode="spheres", codim=2)
    records, _ = collect(cfg)
    decomps = {}
    ok = True
    for rec in records:
        factors, free = join_decompose(rec.complex)
        sizes = [f.complex.n for f in factors]
        simplexlike = all(f.complex.m == 1 and f.complex.masks[0] == f.complex.full for f in factors)
        if free is not None or len(factors) != 2 or not simplexlike:
            ok = False
        decomps[rec.key] = sizes
    return Codim2Report(records, decomps, ok, any(r.flags["unsuspended"] for r in records))

"""Exhaustive ex/EX and spex/SPEX computation for small n.

Graphs are grown one vertex at a time.  Every H-free graph on k vertices is
an H-free graph on k-1 vertices plus a vertex, so extending each canonical
parent by every admissible neighbourhood and deduplicating by canonical label
yields each isomorphism class exactly once.  Admissible neighbourhoods form a
down-set (removing edges cannot create H), which the DFS below exploits.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np

from .canonical import canonical_form
from .constructions import turan_part_sizes
from .errors import CapacityError, InputError
from .graph import Graph, iter_bits
from .graph6 import decode
from .spectral import DEFAULT_TOL, adjacency_matrix, compare_radius_exact, spectral_radius
from .subgraph import contains_subgraph

ALGORITHM_VERSION = "1"
SCHEMA = "spexlab/census-record/1"
DEFAULT_CAP = 10
FULL_CAP = 8
MODES = ("full", "maximal")


def _check_family(family: list[Graph]) -> None:
    if not family:
        raise InputError("forbidden family is empty")
    for h in family:
        if h.num_edges() == 0:
            raise InputError("every forbidden graph needs at least one edge")


def _extend(rows: tuple[int, ...], nbhd: int) -> tuple[int, ...]:
    k = len(rows)
    return tuple(r | (1 << k) if nbhd >> i & 1 else r for i, r in enumerate(rows)) + (nbhd,)


def _free_with_new_vertex(rows: tuple[int, ...], family: list[Graph]) -> bool:
    g = Graph._trusted(len(rows), rows)
    v = len(rows) - 1
    return not any(contains_subgraph(g, h, anchor=v) for h in family)


def _valid_neighbourhoods(rows: tuple[int, ...], family: list[Graph]) -> list[int]:
    """All N such that adding a vertex adjacent to N keeps the graph H-free."""
    k = len(rows)
    out = []
    stack = [(0, 0)]
    while stack:
        nb, start = stack.pop()
        out.append(nb)
        for v in range(k - 1, start - 1, -1):
            cand = nb | 1 << v
            if _free_with_new_vertex(_extend(rows, cand), family):
                stack.append((cand, v + 1))
    return out


def _is_edge_maximal(g: Graph, family: list[Graph], skip_new: int | None = None) -> bool:
    for a, b in g.non_edges():
        if skip_new is not None and b == skip_new:
            continue
        h = g.add_edges([(a, b)])
        if not any(contains_subgraph(h, f, anchor=a) for f in family):
            return False
    return True


def _children(args: tuple[list[str], list[str], bool]) -> list[bytes]:
    parents, fam_g6, maximal_only = args
    family = [decode(s) for s in fam_g6]
    labels = set()
    for p6 in parents:
        parent = decode(p6)
        rows = parent.rows
        k = parent.n
        valid = _valid_neighbourhoods(rows, family)
        valid_set = set(valid)
        for nb in valid:
            if maximal_only:
                # a neighbourhood that can still grow gives a non-maximal child
                if any(nb | 1 << v in valid_set for v in range(k) if not nb >> v & 1):
                    continue
                child = Graph._trusted(k + 1, _extend(rows, nb))
                if not _is_edge_maximal(child, family, skip_new=k):
                    continue
            else:
                child = Graph._trusted(k + 1, _extend(rows, nb))
            labels.add(canonical_form(child))
    return sorted(labels)


def _chunks(items: list[str], parts: int) -> list[list[str]]:
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def enumerate_hfree(n: int, family: list[Graph], maximal_only: bool = False, workers: int = 1,
                    cap: int = DEFAULT_CAP, stats: dict | None = None) -> list[Graph]:
    """Isomorph-free list of n-vertex H-free graphs (all, or edge-maximal
    only), in canonical form and sorted by label."""
    _check_family(family)
    if n < 0:
        raise InputError("n must be nonnegative")
    if n > cap:
        raise CapacityError(f"n = {n} exceeds the census cap {cap}")
    fam_g6 = [h.to_graph6() for h in family]
    level = [Graph(0).to_graph6()]
    counts = [1]
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for k in range(1, n + 1):
            last = k == n
            chunks = _chunks(level, workers * 4 if pool else 1)
            jobs = [(c, fam_g6, maximal_only and last) for c in chunks]
            results = pool.map(_children, jobs) if pool else map(_children, jobs)
            merged = set()
            for r in results:
                merged.update(r)
            level = [lab.decode("ascii") for lab in sorted(merged)]
            counts.append(len(level))
    finally:
        if pool:
            pool.shutdown()
    if stats is not None:
        stats["level_counts"] = counts
    return [decode(s) for s in level]


def enumerate_maximal_hfree(n: int, family: list[Graph], workers: int = 1, cap: int = DEFAULT_CAP) -> list[Graph]:
    return enumerate_hfree(n, family, maximal_only=True, workers=workers, cap=cap)


# records


@dataclass
class CensusRecord:
    forbidden: list[str]
    n: int
    mode: str
    ex: int
    ex_graphs: list[str]
    spex: float
    spex_exact: bool
    spex_graphs: list[str]
    spex_complete: bool
    consistent: bool | str
    counts: dict
    timings: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "schema": SCHEMA,
            "algorithm_version": ALGORITHM_VERSION,
            "forbidden": self.forbidden,
            "n": self.n,
            "mode": self.mode,
            "ex": self.ex,
            "ex_graphs": self.ex_graphs,
            "spex": self.spex,
            "spex_exact": self.spex_exact,
            "spex_graphs": self.spex_graphs,
            "spex_complete": self.spex_complete,
            "consistent": self.consistent,
            "counts": self.counts,
        }
        if timings:
            d["timings"] = self.timings
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CensusRecord:
        if d.get("schema") != SCHEMA:
            raise InputError(f"unexpected census schema {d.get('schema')!r}")
        return cls(d["forbidden"], d["n"], d["mode"], d["ex"], d["ex_graphs"], d["spex"],
                   d["spex_exact"], d["spex_graphs"], d["spex_complete"], d["consistent"],
                   d["counts"], d.get("timings", {}))


def _labels(graphs: list[Graph]) -> list[str]:
    return [g.to_graph6() for g in graphs]


def ex_census(graphs: list[Graph]) -> tuple[int, list[Graph]]:
    ex = max(g.num_edges() for g in graphs)
    return ex, [g for g in graphs if g.num_edges() == ex]


def _screen_radii(graphs: list[Graph]) -> np.ndarray:
    if graphs[0].n == 0:
        return np.zeros(len(graphs))
    stack = np.stack([adjacency_matrix(g) for g in graphs])
    return np.linalg.eigvalsh(stack)[:, -1]


def spex_census(graphs: list[Graph], tol: float = DEFAULT_TOL) -> tuple[float, list[Graph]]:
    """Maximum spectral radius and every graph attaining it.

    A batched symmetric eigen-solve screens candidates; the survivors are
    ranked by power iteration and ties are settled by exact comparison.
    """
    if graphs[0].n == 0:
        return 0.0, list(graphs)
    approx = _screen_radii(graphs)
    top = float(approx.max())
    cands = [g for g, r in zip(graphs, approx) if r >= top - 1e-6]
    best = cands[0]
    members = [best]
    for g in cands[1:]:
        c = compare_radius_exact(g, best, tol)
        if c > 0:
            best, members = g, [g]
        elif c == 0:
            members.append(g)
    return spectral_radius(best, tol).rho, members


def family_key(family: list[Graph]) -> list[str]:
    return sorted(canonical_form(h).decode("ascii") for h in family)


def run_census(n: int, family: list[Graph], mode: str = "full", tol: float = DEFAULT_TOL,
               workers: int = 1, cap: int = DEFAULT_CAP) -> CensusRecord:
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}")
    if mode == "full" and n > FULL_CAP:
        raise CapacityError(f"full mode is limited to n <= {FULL_CAP}; use maximal mode")
    t0 = time.perf_counter()
    stats: dict = {}
    graphs = enumerate_hfree(n, family, maximal_only=(mode == "maximal"), workers=workers, cap=cap, stats=stats)
    t1 = time.perf_counter()
    ex, ex_graphs = ex_census(graphs)
    spex, spex_graphs = spex_census(graphs, tol)
    t2 = time.perf_counter()
    ex_l, spex_l = _labels(ex_graphs), _labels(spex_graphs)
    consistent: bool | str = set(spex_l) <= set(ex_l) if mode == "full" else "value-only"
    return CensusRecord(
        forbidden=family_key(family), n=n, mode=mode, ex=ex, ex_graphs=ex_l,
        spex=spex, spex_exact=True, spex_graphs=spex_l, spex_complete=(mode == "full"),
        consistent=consistent,
        counts={"graphs": len(graphs), "levels": stats["level_counts"]},
        timings={"enumerate_s": t1 - t0, "spectral_s": t2 - t1},
    )


def consistency_check(record: CensusRecord) -> bool | str:
    """SPEX subset of EX; refuses ("value-only") for maximal-mode records."""
    if record.mode != "full":
        return "value-only"
    return set(record.spex_graphs) <= set(record.ex_graphs)


# edit distance to a (gamma-1)-apex Turan graph


def _partition_cost(rows: tuple[int, ...], parts: list[list[int]]) -> int:
    where = {}
    for i, part in enumerate(parts):
        for v in part:
            where[v] = i
    cost = 0
    for u, v in combinations(sorted(where), 2):
        adj = rows[u] >> v & 1
        cost += adj if where[u] == where[v] else 1 - adj
    return cost


def _exact_balanced_partition(g: Graph, p: int) -> tuple[int, list[list[int]]]:
    m = g.n
    sizes = turan_part_sizes(m, p)
    rows = g.rows
    parts = [0] * p
    members: list[list[int]] = [[] for _ in range(p)]
    best_cost = [m * m + 1]
    best_parts: list[list[list[int]]] = [[]]

    def rec(v: int, cost: int, placed: int) -> None:
        if cost >= best_cost[0]:
            return
        if v == m:
            best_cost[0] = cost
            best_parts[0] = [list(x) for x in members]
            return
        seen_empty = set()
        for j in range(p):
            if len(members[j]) >= sizes[j]:
                continue
            if not members[j]:
                # empty parts of equal capacity are interchangeable
                if sizes[j] in seen_empty:
                    continue
                seen_empty.add(sizes[j])
            inside = rows[v] & parts[j]
            outside = placed & ~parts[j]
            delta = inside.bit_count() + outside.bit_count() - (rows[v] & outside).bit_count()
            parts[j] |= 1 << v
            members[j].append(v)
            rec(v + 1, cost + delta, placed | 1 << v)
            members[j].pop()
            parts[j] &= ~(1 << v)

    rec(0, 0, 0)
    return best_cost[0], best_parts[0]


def _local_search_partition(g: Graph, p: int) -> tuple[int, list[list[int]]]:
    """First-improvement descent over swaps and balance-preserving moves.

    With part sizes fixed up to order, the cost is 2*inside + P - e where
    inside counts edges within parts, so only inside needs tracking.
    """
    rows = g.rows
    sizes = turan_part_sizes(g.n, p)
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    masks = []
    it = iter(order)
    for sz in sizes:
        masks.append(sum(1 << next(it) for _ in range(sz)))

    def deg(v: int, m: int) -> int:
        return (rows[v] & m).bit_count()

    improved = True
    while improved:
        improved = False
        for i in range(p):
            for j in range(p):
                if i == j:
                    continue
                for a in iter_bits(masks[i]):
                    if masks[i].bit_count() > masks[j].bit_count():
                        if deg(a, masks[j]) < deg(a, masks[i]):
                            masks[i] &= ~(1 << a)
                            masks[j] |= 1 << a
                            improved = True
                            break
                    if i > j:
                        continue
                    for b in iter_bits(masks[j]):
                        adj = rows[a] >> b & 1
                        delta = (deg(a, masks[j]) - adj + deg(b, masks[i]) - adj
                                 - deg(a, masks[i]) - deg(b, masks[j]))
                        if delta < 0:
                            masks[i] ^= 1 << a | 1 << b
                            masks[j] ^= 1 << a | 1 << b
                            improved = True
                            break
                    if improved:
                        break
                if improved:
                    break
            if improved:
                break
    parts = [list(iter_bits(m)) for m in masks]
    return _partition_cost(rows, parts), parts


EXACT_EDIT_LIMIT = 16


def edit_distance_to_join_turan(g: Graph, p: int, gamma: int) -> tuple[int | None, dict]:
    """Edge edits turning G - W into a balanced complete p-partite graph, where
    W is a set of gamma-1 universal vertices of G."""
    if p < 1 or gamma < 1:
        raise InputError("need p >= 1 and gamma >= 1")
    universal = g.universal_vertices()
    if len(universal) < gamma - 1:
        return None, {"diagnostic": f"only {len(universal)} universal vertices, need {gamma - 1}"}
    # universal vertices are pairwise twins, so any choice of W is equivalent
    w = universal[:gamma - 1]
    rest_vertices = [v for v in range(g.n) if v not in set(w)]
    rest = g.induced(rest_vertices)
    m = rest.n
    target_edges = (m * m - sum(s * s for s in turan_part_sizes(m, p))) // 2
    lower = abs(rest.num_edges() - target_edges)
    if m <= EXACT_EDIT_LIMIT:
        cost, parts = _exact_balanced_partition(rest, p)
        exact = True
    else:
        cost, parts = _local_search_partition(rest, p)
        exact = cost == lower
    parts = [[rest_vertices[v] for v in part] for part in parts]
    return cost, {"W": w, "parts": parts, "exact": exact, "lower_bound": lower}


# cache


def cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    d = explicit or os.environ.get("SPEXLAB_CACHE")
    return Path(d) if d else None


def cache_key(forbidden: list[str], n: int, mode: str) -> str:
    blob = json.dumps({"forbidden": forbidden, "n": n, "mode": mode, "version": ALGORITHM_VERSION},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def validate_record(record: CensusRecord, family: list[Graph]) -> None:
    """Re-check H-freeness and edge counts of every listed graph."""
    for s in set(record.ex_graphs) | set(record.spex_graphs):
        g = decode(s)
        if g.n != record.n or any(contains_subgraph(g, h) for h in family):
            raise InputError(f"cached record lists a graph that is not H-free: {s}")
    for s in record.ex_graphs:
        if decode(s).num_edges() != record.ex:
            raise InputError(f"cached EX graph {s} does not have {record.ex} edges")


def load_or_run(n: int, family: list[Graph], mode: str = "full", tol: float = DEFAULT_TOL,
                workers: int = 1, cache: Path | None = None, cap: int = DEFAULT_CAP) -> CensusRecord:
    from .jsonio import dumps

    if cache is None:
        return run_census(n, family, mode, tol, workers, cap)
    path = cache / f"census-{cache_key(family_key(family), n, mode)}.json"
    if path.exists():
        rec = CensusRecord.from_dict(json.loads(path.read_text(encoding="utf-8")))
        validate_record(rec, family)
        return rec
    rec = run_census(n, family, mode, tol, workers, cap)
    atomic_write(path, dumps(rec.to_dict()))
    return rec

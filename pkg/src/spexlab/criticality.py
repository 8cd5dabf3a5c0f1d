"""Colour-criticality of forbidden families and the fixed-n matching-good check."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .census import DEFAULT_CAP, FULL_CAP, edit_distance_to_join_turan, run_census
from .constructions import complete
from .decomposition import (
    b_family,
    beta_gamma,
    decomposition_family,
    p_value,
    smallest_matching_member,
)
from .errors import CapacityError, InputError
from .graph import Graph, chromatic_number, delete_vertices, has_odd_cycle_in, k_coloring
from .graph6 import decode
from .subgraph import contains_subgraph


def is_one_color_critical(h: Graph) -> tuple[bool, tuple[int, int] | None]:
    """True with the first edge (lexicographic) whose deletion lowers chi."""
    chi = chromatic_number(h)
    if chi < 3:
        raise InputError(f"one-colour-criticality needs chi >= 3, got {chi}")
    for e in h.edges():
        if k_coloring(h.remove_edges([e]), chi - 1) is not None:
            return True, e
    return False, None


@dataclass
class CriticalityReport:
    q: int
    p: int
    condition_i: bool
    violating_member: int | None = None
    violating_subset: list[int] | None = None
    condition_ii: bool = False
    witness_member: int | None = None
    witness_coloring: list[int] | None = None
    checks: int = 0

    @property
    def verdict(self) -> bool:
        return self.condition_i and self.condition_ii

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "condition_i": {"pass": self.condition_i, "member": self.violating_member,
                            "subset": self.violating_subset, "checks": self.checks},
            "condition_ii": {"pass": self.condition_ii, "member": self.witness_member,
                             "coloring": self.witness_coloring},
            "verdict": self.verdict,
        }


def _still_chromatic(h: Graph, s: tuple[int, ...], p: int) -> bool:
    """chi(H - S) >= p + 1."""
    if p == 2:
        return has_odd_cycle_in(h.rows, h.vertex_mask & ~sum(1 << v for v in s))
    return k_coloring(delete_vertices(h, s), p) is None


def condition_i(family: list[Graph], q: int, p: int) -> tuple[bool, int | None, list[int] | None, int]:
    checks = 0
    for idx, h in enumerate(family):
        for s in combinations(range(h.n), q - 1):
            checks += 1
            if not _still_chromatic(h, s, p):
                return False, idx, list(s), checks
    return True, None, None, checks


def designated_coloring(h: Graph, colours: int, q: int) -> list[int] | None:
    """Proper colouring with `colours` colours whose classes 0 and 1 induce
    exactly q independent edges (plus isolated vertices).

    Vertices are coloured in index order with forward checking.  Classes 0/1
    are interchangeable, as are classes 2.., so each group opens a new class
    only after the previous one is used; the first hit is the lexicographically
    least normalised witness.
    """
    n = h.n
    rows = h.rows
    full = (1 << colours) - 1
    colour = [-1] * n
    pair_deg = [0] * n

    def rec(v: int, dom: list[int], edges: int, top01: int, top_rest: int) -> bool:
        if v == n:
            return edges == q
        for c in range(colours):
            if not dom[v] >> c & 1:
                continue
            if c == 1 and top01 < 0:
                continue
            if c >= 3 and top_rest < c - 1:
                continue
            added = 0
            if c < 2:
                other = 1 - c
                nbrs = [u for u in range(v) if rows[v] >> u & 1 and colour[u] == other]
                if len(nbrs) > 1 or any(pair_deg[u] for u in nbrs):
                    continue
                added = len(nbrs)
                if edges + added > q:
                    continue
            nd = list(dom)
            bad = False
            bit = ~(1 << c)
            x = rows[v] >> (v + 1) << (v + 1)
            while x:
                u = (x & -x).bit_length() - 1
                x &= x - 1
                nd[u] &= bit
                if not nd[u]:
                    bad = True
                    break
            if bad:
                continue
            colour[v] = c
            for u in range(v):
                if added and rows[v] >> u & 1 and colour[u] == 1 - c:
                    pair_deg[u] += 1
            pair_deg[v] = added
            if rec(v + 1, nd, edges + added,
                   max(top01, c) if c < 2 else top01,
                   max(top_rest, c) if c >= 2 else top_rest):
                return True
            for u in range(v):
                if added and rows[v] >> u & 1 and colour[u] == 1 - c:
                    pair_deg[u] -= 1
            pair_deg[v] = 0
            colour[v] = -1
        return False

    if colours < 2:
        return None
    return list(colour) if rec(0, [full] * n, 0, -1, 1) else None


def validate_coloring(h: Graph, coloring: list[int], colours: int, q: int) -> bool:
    if len(coloring) != h.n or any(not 0 <= c < colours for c in coloring):
        return False
    if any(coloring[u] == coloring[v] for u, v in h.edges()):
        return False
    pair = [v for v in range(h.n) if coloring[v] < 2]
    sub = h.induced(pair)
    if sub.n and sub.max_degree() > 1:
        return False
    return sub.num_edges() == q


def q_color_critical(family: list[Graph], q: int) -> CriticalityReport:
    fam = list(family)
    p = p_value(fam)
    if p < 2:
        raise InputError(f"criticality needs p(H) >= 2, got {p}")
    if q < 1:
        raise InputError("q must be at least 1")
    ok_i, idx, s, checks = condition_i(fam, q, p)
    rep = CriticalityReport(q=q, p=p, condition_i=ok_i, violating_member=idx,
                            violating_subset=s, checks=checks)
    for j, h in enumerate(fam):
        col = designated_coloring(h, p + 1, q)
        if col is not None:
            rep.condition_ii, rep.witness_member, rep.witness_coloring = True, j, col
            break
    return rep


def criticality_order(family: list[Graph]) -> tuple[int | None, CriticalityReport | None]:
    """Least q with a passing report, searching upward to max |H|."""
    fam = list(family)
    p = p_value(fam)
    if p < 2:
        raise InputError(f"criticality needs p(H) >= 2, got {p}")
    for q in range(1, max(h.n for h in fam) + 1):
        rep = q_color_critical(fam, q)
        if not rep.condition_i:
            # condition (i) at q implies it at every smaller q, so stop here
            return None, None
        if rep.verdict:
            return q, rep
    return None, None


# matching-good evidence at a fixed n


@dataclass
class MatchingGoodReport:
    forbidden: str
    n: int
    p: int
    gamma: int
    has_matching_member: bool
    smallest_matching: int | None
    apex_ok: bool
    ex: int
    ex_graphs: list[str]
    edits: list[int | None] = field(default_factory=list)
    min_edits: int | None = None
    edit_budget: int = 0
    passed: bool = False
    note: str = "evidence at n"

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def matching_good_desk_check(h: Graph, n: int, edit_budget: int, workers: int = 1) -> MatchingGoodReport:
    if n > DEFAULT_CAP:
        raise CapacityError(f"no census at n = {n} (cap {DEFAULT_CAP})")
    df = decomposition_family([h])
    p = df.p
    _, gamma = beta_gamma(df)
    k = smallest_matching_member(df)
    b = b_family(df)
    # G[W] is complete, so it lies in EX(gamma-1, B) iff K_{gamma-1} is B-free
    apex = complete(gamma - 1)
    apex_ok = not any(contains_subgraph(apex, m) for m in b)
    # EX graphs are edge-maximal, so maximal mode already lists all of them
    mode = "full" if n <= FULL_CAP else "maximal"
    rec = run_census(n, [h], mode=mode, workers=workers)
    edits = [edit_distance_to_join_turan(decode(s), p, gamma)[0] for s in rec.ex_graphs]
    found = [e for e in edits if e is not None]
    best = min(found) if found else None
    passed = k is not None and apex_ok and best is not None and best <= edit_budget
    return MatchingGoodReport(
        forbidden=h.to_graph6(), n=n, p=p, gamma=gamma, has_matching_member=k is not None,
        smallest_matching=k, apex_ok=apex_ok, ex=rec.ex, ex_graphs=rec.ex_graphs, edits=edits,
        min_edits=best, edit_budget=edit_budget, passed=passed,
    )

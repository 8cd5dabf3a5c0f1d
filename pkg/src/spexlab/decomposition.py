"""Decomposition families M(H) and the covering parameters derived from them.

A graph M belongs to M(H) when it is subgraph-minimal among graphs with
H contained in (M u E_t) joined to T_{p-1}((p-1)t).  Any such embedding
splits V(H) into P_1 (mapped into M u E_t) and p-1 independent sets, so the
candidates are exactly the cores H[P_1] with isolated vertices stripped, taken
over every P_1 whose complement is (p-1)-colourable.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from .constructions import complete, empty, turan
from .errors import CapacityError, InputError
from .graph import (
    MAX_ORDER,
    Graph,
    chromatic_number,
    covering_number,
    disjoint_union,
    independence_number,
    independent_covering_number,
    is_bipartite,
    is_matching,
    iter_bits,
    join,
    k_coloring,
)
from .subgraph import contains_subgraph

MAX_ORDER_P2 = 20
MAX_ORDER_GENERAL = 16


@dataclass(frozen=True)
class DecompositionFamily:
    members: tuple[Graph, ...]
    p: int
    t_used: int
    source: tuple[bytes, ...]

    def labels(self) -> tuple[bytes, ...]:
        return tuple(m.canonical_label() for m in self.members)


def p_value(family: Iterable[Graph]) -> int:
    chis = [chromatic_number(h) for h in family]
    if not chis:
        raise InputError("p(H) needs a nonempty family")
    return min(chis) - 1


def _require_p(family: list[Graph]) -> int:
    p = p_value(family)
    if p < 2:
        raise InputError(f"decomposition families need p(H) >= 2, got p = {p}")
    return p


def blowup_host(m: Graph, t: int, p: int) -> Graph:
    """(M u E_t) joined to T_{p-1}((p-1)t)."""
    order = m.n + t + (p - 1) * t
    if order > MAX_ORDER:
        raise CapacityError(f"blow-up host would have {order} vertices (cap {MAX_ORDER}); reduce t")
    return join(disjoint_union(m, empty(t)), turan((p - 1) * t, p - 1))


def naive_member_check(h: Graph, m: Graph, t: int) -> bool:
    """Literal test of H inside (M u E_t) joined to T_{p-1}((p-1)t)."""
    p = _require_p([h])
    if t < h.n:
        raise InputError(f"blow-up constant t = {t} must be at least |H| = {h.n}")
    return contains_subgraph(blowup_host(m, t, p), h)


def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """Bron-Kerbosch with pivoting on the complement; yields vertex masks."""
    comp = g.complement().rows

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pool = p | x
        pivot = max(iter_bits(pool), key=lambda u: ((p & comp[u]).bit_count(), -u))
        for v in iter_bits(p & ~comp[pivot]):
            yield from bk(r | 1 << v, p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from bk(0, g.vertex_mask, 0)


def _maximal_colourable_sets(g: Graph, k: int) -> list[int]:
    """Masks Y with g[Y] k-colourable and no single vertex addable."""
    n = g.n
    ok = bytearray(1 << n)
    for y in range(1 << n):
        if y.bit_count() <= k:
            ok[y] = 1
            continue
        # hereditary: a failing proper subset rules y out
        low = y & -y
        if not ok[y ^ low]:
            continue
        ok[y] = k_coloring(g.induced(iter_bits(y)), k) is not None
    out = []
    for y in range(1 << n):
        if ok[y] and all(not ok[y | 1 << v] for v in range(n) if not y >> v & 1):
            out.append(y)
    return out


def core_candidates(h: Graph, p: int) -> Iterator[Graph]:
    """Cores H[P_1] minus isolated vertices for inclusion-minimal P_1."""
    full = h.vertex_mask
    if p == 2:
        if h.n > MAX_ORDER_P2:
            raise CapacityError(f"|H| = {h.n} exceeds the p = 2 enumeration limit {MAX_ORDER_P2}")
        rest = maximal_independent_sets(h)
    else:
        if h.n > MAX_ORDER_GENERAL:
            raise CapacityError(f"|H| = {h.n} exceeds the p >= 3 enumeration limit {MAX_ORDER_GENERAL}")
        rest = _maximal_colourable_sets(h, p - 1)
    for y in rest:
        yield h.induced(iter_bits(full & ~y)).without_isolated()


def minimal_elements(graphs: Iterable[Graph]) -> list[Graph]:
    """Subgraph-minimal members of a set of isolate-free graphs, canonical and
    sorted by (edges, order, label)."""
    uniq: dict[bytes, Graph] = {}
    for g in graphs:
        lab = g.canonical_label()
        if lab not in uniq:
            uniq[lab] = g
    ranked = sorted(uniq.items(), key=lambda kv: (kv[1].num_edges(), kv[1].n, kv[0]))
    kept: list[tuple[bytes, Graph]] = []
    for lab, g in ranked:
        # proper subgraphs of an isolate-free graph have strictly fewer edges
        if not any(k.num_edges() < g.num_edges() and contains_subgraph(g, k) for _, k in kept):
            kept.append((lab, g))
    from .canonical import canonical_graph

    return [canonical_graph(g) for _, g in kept]


def decomposition_family(family: Iterable[Graph], t_override: int | None = None,
                         validate: bool = True) -> DecompositionFamily:
    fam = list(family)
    p = _require_p(fam)
    t = t_override if t_override is not None else max(h.n for h in fam)
    cands = [c for h in fam for c in core_candidates(h, p)]
    members = minimal_elements(cands)
    if validate:
        for m in members:
            hosts_fit = [h for h in fam if m.n + p * t <= MAX_ORDER and t >= h.n]
            if hosts_fit and not any(contains_subgraph(blowup_host(m, t, p), h) for h in hosts_fit):
                raise RuntimeError(f"member {m.to_graph6()} failed the blow-up check at t = {t}")
    source = tuple(sorted(h.canonical_label() for h in fam))
    return DecompositionFamily(tuple(members), p, t, source)


def beta_gamma(df: DecompositionFamily) -> tuple[int, int]:
    beta = min(covering_number(m) for m in df.members)
    gammas = [g for g in (independent_covering_number(m) for m in df.members) if g is not None]
    if not gammas:
        raise RuntimeError("decomposition family has no bipartite member")
    return beta, min(gammas)


def b_family(df: DecompositionFamily) -> list[Graph]:
    beta, gamma = beta_gamma(df)
    if beta == gamma:
        return [complete(gamma)]
    out: dict[bytes, Graph] = {}
    for m in df.members:
        for size in range(gamma):
            for s in combinations(range(m.n), size):
                sm = sum(1 << v for v in s)
                if all(sm >> u & 1 or sm >> v & 1 for u, v in m.edges()):
                    piece = m.induced(s)
                    out.setdefault(piece.canonical_label(), piece)
    from .canonical import canonical_graph

    return [canonical_graph(out[k]) for k in sorted(out)]


def q_value(h: Graph) -> int:
    """Least q with H inside E_q joined to T_p(p*s), s = alpha(H).

    Each blow-up part holds an independent set of H, so s = alpha(H) already
    suffices wherever the literal part size |H| does.
    """
    p = _require_p([h])
    s = independence_number(h)
    for q in range(1, h.n + 1):
        if q + p * s > MAX_ORDER:
            raise CapacityError(f"E_{q} joined to T_{p}({p * s}) exceeds {MAX_ORDER} vertices")
        if contains_subgraph(join(empty(q), turan(p * s, p)), h):
            return q
    raise RuntimeError("no q found; H is not (p+1)-colourable")


def smallest_matching_member(df: DecompositionFamily) -> int | None:
    ks = [m.n // 2 for m in df.members if is_matching(m)]
    return min(ks) if ks else None


def is_star(g: Graph) -> bool:
    if g.n < 2 or g.num_edges() != g.n - 1:
        return False
    return any(g.degree(v) == g.n - 1 for v in range(g.n))


def has_star_and_matching(df: DecompositionFamily) -> bool:
    return smallest_matching_member(df) is not None and any(is_star(m) for m in df.members)


def has_bipartite_member(df: DecompositionFamily) -> bool:
    return any(is_bipartite(m)[0] for m in df.members)

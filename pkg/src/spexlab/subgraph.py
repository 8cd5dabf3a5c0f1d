"""Non-induced subgraph containment by backtracking over bitset candidates."""
from __future__ import annotations

from collections.abc import Iterable

from .graph import Graph, iter_bits


def _twin_lower(rows: tuple[int, ...]) -> list[int]:
    out = []
    for v, rv in enumerate(rows):
        cv = rv | 1 << v
        m = 0
        for w in range(v):
            if rows[w] == rv or rows[w] | 1 << w == cv:
                m |= 1 << w
        out.append(m)
    return out


def _pattern_order(pattern: Graph, start: int) -> list[int]:
    rows = pattern.rows
    deg = pattern.degrees()
    order = [start]
    placed = 1 << start
    while len(order) < pattern.n:
        best, key = -1, None
        for v in range(pattern.n):
            if placed >> v & 1:
                continue
            k = ((rows[v] & placed).bit_count(), deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed |= 1 << best
    return order


def _has_clique(rows: tuple[int, ...], cand: int, k: int) -> list[int] | None:
    if k == 0:
        return []
    while cand.bit_count() >= k:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = _has_clique(rows, cand & rows[v], k - 1)
        if sub is not None:
            return [v] + sub
    return None


def is_complete(g: Graph) -> bool:
    return g.num_edges() == g.n * (g.n - 1) // 2


def _degree_dominated(host: Graph, pattern: Graph) -> bool:
    hd = sorted(host.degrees(), reverse=True)
    pd = sorted(pattern.degrees(), reverse=True)
    return all(a <= b for a, b in zip(pd, hd))


def find_subgraph(host: Graph, pattern: Graph, anchor: int | None = None) -> list[int] | None:
    """Injective map ``pattern -> host`` carrying edges to edges, or None.

    With ``anchor`` set, only embeddings whose image contains that host
    vertex are considered.
    """
    m = pattern.n
    if m > host.n:
        return None
    if m == 0:
        return None if anchor is not None else []
    if pattern.num_edges() > host.num_edges() or not _degree_dominated(host, pattern):
        return None
    hrows = host.rows
    if is_complete(pattern):
        if anchor is None:
            found = _has_clique(hrows, host.vertex_mask, m)
        else:
            rest = _has_clique(hrows, hrows[anchor], m - 1)
            found = None if rest is None else [anchor] + rest
        return found

    prow = pattern.rows
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    deg_ok = {}
    for d in set(pdeg):
        deg_ok[d] = sum(1 << y for y in range(host.n) if hdeg[y] >= d)
    host_twins = _twin_lower(hrows)
    full = host.vertex_mask

    def run(order: list[int], first_image: int | None) -> list[int] | None:
        pos = {x: i for i, x in enumerate(order)}
        prev = [[pos[u] for u in iter_bits(prow[x]) if pos[u] < i] for i, x in enumerate(order)]
        need = [deg_ok[pdeg[x]] for x in order]
        img = [0] * m

        def rec(k: int, used: int) -> bool:
            if k == m:
                return True
            cand = full & ~used & need[k]
            for j in prev[k]:
                cand &= hrows[img[j]]
            c = cand
            while c:
                low = c & -c
                c ^= low
                y = low.bit_length() - 1
                if host_twins[y] & cand:
                    continue
                img[k] = y
                if rec(k + 1, used | low):
                    return True
            return False

        if first_image is None:
            ok = rec(0, 0)
        else:
            if not need[0] >> first_image & 1:
                return None
            img[0] = first_image
            ok = rec(1, 1 << first_image)
        if not ok:
            return None
        mapping = [0] * m
        for i, x in enumerate(order):
            mapping[x] = img[i]
        return mapping

    if anchor is None:
        start = max(range(m), key=lambda v: (pdeg[v], -v))
        return run(_pattern_order(pattern, start), None)
    ptwins = _twin_lower(prow)
    for x in range(m):
        if ptwins[x] or pdeg[x] > hdeg[anchor]:
            continue
        found = run(_pattern_order(pattern, x), anchor)
        if found is not None:
            return found
    return None


def contains_subgraph(host: Graph, pattern: Graph, anchor: int | None = None) -> bool:
    return find_subgraph(host, pattern, anchor) is not None


def is_embedding(host: Graph, pattern: Graph, mapping: list[int]) -> bool:
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= y < host.n for y in mapping):
        return False
    return all(host.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges())


def is_free(host: Graph, family: Iterable[Graph], anchor: int | None = None) -> bool:
    return not any(contains_subgraph(host, h, anchor) for h in family)

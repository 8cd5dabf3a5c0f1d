"""Canonical labelling by colour refinement plus individualisation.

The search tree branches on the first non-singleton cell of an equitable
ordered partition; leaves are discrete partitions, each giving a relabelled
adjacency, and the lexicographically largest one wins.  Two vertices of the
target cell that are twins (equal open or closed neighbourhoods) are swapped
by an automorphism fixing everything else, so only the lowest-numbered member
of each twin class is expanded.
"""
from __future__ import annotations

from collections import deque

from .graph import Graph, iter_bits


def _twin_masks(rows: tuple[int, ...]) -> list[int]:
    n = len(rows)
    out = [0] * n
    for v in range(n):
        rv, cv = rows[v], rows[v] | 1 << v
        m = 0
        for w in range(v):
            if rows[w] == rv or rows[w] | 1 << w == cv:
                m |= 1 << w
        out[v] = m
    return out


def refine(rows: tuple[int, ...], cells: list[int], splitters: list[int]) -> list[int]:
    """Refine the ordered partition ``cells`` (vertex masks) until equitable.

    Sub-cells are ordered by their neighbour count into the splitter, which
    keeps the result independent of vertex numbering.
    """
    queue = deque(splitters)
    while queue:
        sp = queue.popleft()
        new_cells = []
        changed = False
        for c in cells:
            if not c & (c - 1):
                new_cells.append(c)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(c):
                k = (rows[v] & sp).bit_count()
                groups[k] = groups.get(k, 0) | 1 << v
            if len(groups) == 1:
                new_cells.append(c)
                continue
            changed = True
            for k in sorted(groups):
                new_cells.append(groups[k])
                queue.append(groups[k])
        if changed:
            cells = new_cells
            if len(cells) == len(rows):
                break
    return cells


def _certificate(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    cert = []
    for v in order:
        m = 0
        for u in iter_bits(rows[v]):
            m |= 1 << pos[u]
        cert.append(m)
    return tuple(cert)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling is the canonical representative:
    new vertex ``i`` is old vertex ``order[i]``."""
    rows = g.rows
    n = g.n
    if n <= 1:
        return list(range(n))
    twins = _twin_masks(rows)
    best_cert: tuple[int, ...] | None = None
    best_order: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_cert, best_order
        for i, c in enumerate(cells):
            if c & (c - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(rows, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            return
        for v in iter_bits(c):
            if twins[v] & c:
                continue
            single = 1 << v
            child = cells[:i] + [single, c ^ single] + cells[i + 1:]
            search(refine(rows, child, [single]))

    search(refine(rows, [g.vertex_mask], [g.vertex_mask]))
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    return Graph._trusted(g.n, _certificate(g.rows, order))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class key: the graph6 bytes of the canonical relabelling."""
    from .graph6 import encode

    return encode(canonical_graph(g)).encode("ascii")

"""Deterministic builders for the named graphs and extremal constructions."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError
from .graph import Graph, disjoint_union, join


def empty(t: int) -> Graph:
    if t < 0:
        raise InputError("empty graph needs t >= 0")
    return Graph(t)


def complete(k: int) -> Graph:
    if k < 0:
        raise InputError("complete graph needs k >= 0")
    return Graph.from_edges(k, combinations(range(k), 2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise InputError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """Path on k vertices."""
    if k < 1:
        raise InputError("path needs k >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> Graph:
    """S_k: k vertices, centre 0 and k-1 leaves."""
    if k < 1:
        raise InputError("star needs k >= 1")
    return Graph.from_edges(k, [(0, i) for i in range(1, k)])


def matching(k: int) -> Graph:
    """M_k: k disjoint edges on 2k vertices."""
    if k < 0:
        raise InputError("matching needs k >= 0")
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 0 or t < 0:
        raise InputError("complete bipartite needs s, t >= 0")
    return join(empty(s), empty(t))


def complete_multipartite(sizes: list[int]) -> Graph:
    g = Graph(0)
    for s in sizes:
        g = join(g, empty(s))
    return g


def turan_part_sizes(n: int, p: int) -> list[int]:
    if p < 1:
        raise InputError(f"Turan graph needs p >= 1, got {p}")
    if n < 0:
        raise InputError("Turan graph needs n >= 0")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan(n: int, p: int) -> Graph:
    """T_p(n); parts are numbered consecutively, larger parts first."""
    return complete_multipartite([s for s in turan_part_sizes(n, p) if s])


def hnpq(n: int, p: int, q: int) -> Graph:
    """H(n,p,q) = K_{q-1} joined to T_p(n-q+1)."""
    if q < 1 or p < 1 or n < q - 1:
        raise InputError(f"H(n,p,q) needs q >= 1, p >= 1, n >= q-1 (got {n},{p},{q})")
    return join(complete(q - 1), turan(n - q + 1, p))


def kneser(t: int, k: int = 2) -> Graph:
    if t < 1 or k < 1:
        raise InputError("Kneser graph needs t, k >= 1")
    subsets = [frozenset(c) for c in combinations(range(t), k)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def generalized_petersen(m: int, k: int) -> Graph:
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((i, m + i))
        edges.append((m + i, m + (i + k) % m))
    return Graph.from_edges(2 * m, {tuple(sorted(e)) for e in edges})


def dodecahedron() -> Graph:
    # GP(10, 2) is the dodecahedral graph
    return generalized_petersen(10, 2)


def friendship(k: int) -> Graph:
    """F_k: k triangles sharing vertex 0."""
    if k < 1:
        raise InputError("friendship graph needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def wheel(k: int) -> Graph:
    """K_1 joined to C_k (k+1 vertices)."""
    return join(complete(1), cycle(k))


@dataclass(frozen=True)
class BalloonSpec:
    base: Graph
    lengths: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        norm = {}
        for (u, v), ell in self.lengths.items():
            norm[(min(u, v), max(u, v))] = ell
        object.__setattr__(self, "lengths", norm)
        edges = set(self.base.edges())
        if set(norm) != edges:
            missing = sorted(edges - set(norm))
            extra = sorted(set(norm) - edges)
            raise InputError(f"balloon lengths must cover exactly the base edges (missing {missing}, extra {extra})")
        for e, ell in norm.items():
            if ell < 5 or ell % 2 == 0:
                raise InputError(f"balloon length for edge {e} must be odd and >= 5, got {ell}")

    @classmethod
    def uniform(cls, base: Graph, length: int) -> BalloonSpec:
        return cls(base, {e: length for e in base.edges()})


def odd_ballooning(spec: BalloonSpec) -> Graph:
    """Replace each base edge uv by an odd cycle through u and v.

    The cycle keeps the edge uv and adds a path of ``length - 2`` fresh
    vertices from u to v; fresh vertices are appended in base-edge order.
    """
    base = spec.base
    n = base.n
    edges = list(base.edges())
    for (u, v) in base.edges():
        fresh = list(range(n, n + spec.lengths[(u, v)] - 2))
        n += len(fresh)
        chain = [u] + fresh + [v]
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def h_t1t1(t: int) -> Graph:
    """K_{t-1,t-1} minus t-2 independent edges.

    Vertices 0..t-2 are u_1..u_{t-1} and t-1..2t-3 are v_1..v_{t-1}; the
    removed edges are u_i v_i for i = 2..t-1, so v_1 keeps full degree.
    """
    if t < 2:
        raise InputError("H_{t-1,t-1} needs t >= 2")
    s = t - 1
    edges = [(i, s + j) for i in range(s) for j in range(s) if not (i == j and i >= 1)]
    return Graph.from_edges(2 * s, edges)


def embed_in_part(base_outer: Graph, p: int, inner_n: int, patch: Graph) -> Graph:
    """base_outer joined to T_p(inner_n), with ``patch`` placed on the first
    vertices of the first Turan part."""
    sizes = turan_part_sizes(inner_n, p)
    if patch.n > inner_n // p:
        raise InputError(f"patch on {patch.n} vertices does not fit a part of T_{p}({inner_n})")
    g = join(base_outer, turan(inner_n, p))
    off = base_outer.n
    assert patch.n <= sizes[0]
    return g.add_edges((off + a, off + b) for a, b in patch.edges())


def h_prime_22(n: int) -> Graph:
    """H'(n,2,2): K_1 joined to T_2(n-1) with an edge inside one class."""
    return embed_in_part(complete(1), 2, n - 1, complete(2))


def g_st(n: int, s: int, t: int) -> Graph:
    if not t >= s >= 2:
        raise InputError("G_{s,t} needs t >= s >= 2")
    return embed_in_part(complete(s - 1), 2, n - s + 1, h_t1t1(t))


def g33_prime(n: int) -> Graph:
    """K_2 joined to T_2(n-2) with a triangle inside one class."""
    return embed_in_part(complete(2), 2, n - 2, complete(3))


def union_all(graphs: list[Graph]) -> Graph:
    g = Graph(0)
    for h in graphs:
        g = disjoint_union(g, h)
    return g

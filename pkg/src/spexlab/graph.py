"""Small simple graphs stored as bitset adjacency rows.

A :class:`Graph` on ``n`` vertices keeps one Python ``int`` per vertex whose
bit ``j`` is set when the vertex is adjacent to ``j``.  Vertices are always
``0..n-1``.  Graphs are immutable; every operation below returns a new graph.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapacityError, InputError

MAX_ORDER = 62


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "rows", "_label")

    def __init__(self, n: int, rows: Iterable[int] | None = None):
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"graph order {n} outside 0..{MAX_ORDER}")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise InputError(f"row {v} has bits outside the vertex set or a loop")
            for u in iter_bits(r):
                if not rows[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at ({v}, {u})")
        self.n = n
        self.rows = rows
        self._label = None

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        if n > MAX_ORDER:
            raise CapacityError(f"graph order {n} exceeds {MAX_ORDER}")
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._label = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"graph order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad edge ({u}, {v}) for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    # basic accessors

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.vertex_mask
        out = []
        for u in range(self.n):
            miss = full & ~self.rows[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in iter_bits(miss))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def universal_vertices(self) -> list[int]:
        full = self.vertex_mask
        return [v for v in range(self.n) if self.rows[v] | (1 << v) == full]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.rows[v]]

    # derived graphs

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.rows)
        for u, v in edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"bad edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph._trusted(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, renumbered in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        if len(pos) != len(vs):
            raise InputError("repeated vertex in induced()")
        rows = []
        for v in vs:
            if not 0 <= v < self.n:
                raise InputError(f"vertex {v} out of range")
            r = 0
            for u in iter_bits(self.rows[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(len(vs), tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(r))
        return Graph._trusted(self.n, tuple(rows))

    def without_isolated(self) -> Graph:
        keep = [v for v in range(self.n) if self.rows[v]]
        return self if len(keep) == self.n else self.induced(keep)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    # identity

    def canonical_label(self) -> bytes:
        if self._label is None:
            from .canonical import canonical_form

            self._label = canonical_form(self)
        return self._label

    def to_graph6(self) -> str:
        from .graph6 import encode

        return encode(self)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of ``g`` and ``h`` plus every edge between them."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityError(f"join of orders {g.n}+{h.n} exceeds {MAX_ORDER}")
    gmask = g.vertex_mask
    hmask = h.vertex_mask << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph._trusted(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise CapacityError(f"union of orders {g.n}+{h.n} exceeds {MAX_ORDER}")
    return Graph._trusted(n, g.rows + tuple(r << g.n for r in h.rows))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    drop = set(s)
    for v in drop:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for order {g.n}")
    return g.induced(v for v in range(g.n) if v not in drop)


# classical invariants


def is_bipartite(g: Graph) -> tuple[bool, tuple[list[int], list[int]] | None]:
    """2-colour ``g``; returns the two colour classes when it succeeds.

    Each component's lowest vertex goes to the first class.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.rows[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False, None
    return True, ([v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1])


def has_odd_cycle_in(rows: tuple[int, ...], mask: int) -> bool:
    """True when the subgraph induced on ``mask`` is not bipartite."""
    todo = mask
    while todo:
        s = todo & -todo
        side = [s, 0]
        seen = frontier = s
        parity = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= mask
            # an edge inside one BFS layer closes an odd cycle
            if nxt & side[parity]:
                return True
            frontier = nxt & ~seen
            parity ^= 1
            side[parity] |= frontier
            seen |= frontier
        todo &= ~seen
    return False


def max_clique(g: Graph, within: int | None = None) -> list[int]:
    """A maximum clique (lowest-index-first search order)."""
    rows = g.rows
    best: list[int] = []

    def expand(chosen: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        while cand:
            if len(chosen) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            chosen.append(v)
            expand(chosen, cand & rows[v])
            chosen.pop()
            cand ^= low

    expand([], g.vertex_mask if within is None else within)
    return best


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    return len(max_clique(g.complement()))


def _greedy_coloring(g: Graph) -> list[int]:
    # DSATUR, ties broken by degree then index
    colors = [-1] * g.n
    nbr_colors = [0] * g.n
    deg = g.degrees()
    for _ in range(g.n):
        v = max((u for u in range(g.n) if colors[u] < 0),
                key=lambda u: (nbr_colors[u].bit_count(), deg[u], -u))
        c = 0
        while nbr_colors[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in iter_bits(g.rows[v]):
            nbr_colors[u] |= 1 << c
    return colors


def k_coloring(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with colours ``0..k-1``, or None if none exists."""
    if g.n == 0:
        return []
    if k <= 0:
        return None
    rows = g.rows
    colors = [-1] * g.n
    classes = [0] * k
    deg = g.degrees()

    def pick() -> int:
        best, key = -1, None
        for v in range(g.n):
            if colors[v] >= 0:
                continue
            sat = sum(1 for c in classes if c & rows[v])
            kk = (sat, deg[v])
            if key is None or kk > key:
                best, key = v, kk
        return best

    def solve(done: int, used: int) -> bool:
        if done == g.n:
            return True
        v = pick()
        for c in range(min(used + 1, k)):
            if classes[c] & rows[v]:
                continue
            colors[v] = c
            classes[c] |= 1 << v
            if solve(done + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return colors if solve(0, 0) else None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    decide colourability for each k in between."""
    if g.n == 0:
        return 0
    lo = clique_number(g)
    hi = max(_greedy_coloring(g)) + 1
    for k in range(lo, hi):
        if k_coloring(g, k) is not None:
            return k
    return hi


def matching_number(g: Graph) -> int:
    """Maximum matching size by memoised branching on the lowest vertex.

    Exponential in the worst case; intended for the small graphs used here.
    """
    rows = g.rows
    memo: dict[int, int] = {}

    def nu(mask: int) -> int:
        # drop isolated vertices first
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if rows[v] & mask:
                break
            mask ^= low
        if not mask:
            return 0
        if mask in memo:
            return memo[mask]
        cap = mask.bit_count() // 2
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = 0
        for u in iter_bits(rows[v] & rest):
            best = max(best, 1 + nu(rest & ~(1 << u)))
            if best == cap:
                break
        if best < cap:
            best = max(best, nu(rest))
        memo[mask] = best
        return best

    return nu(g.vertex_mask)


def covering_number(g: Graph) -> int:
    """Minimum vertex cover size, as ``n - alpha``."""
    return g.n - independence_number(g)


def independent_covering_number(g: Graph) -> int | None:
    """Minimum independent vertex cover, or None when none exists.

    An independent cover forces its complement to be independent too, so one
    exists exactly when ``g`` is bipartite, and then it is the smaller side of
    each non-trivial component.
    """
    ok, _ = is_bipartite(g)
    if not ok:
        return None
    total = 0
    for comp in g.components():
        if len(comp) == 1:
            continue
        ok, (a, b) = is_bipartite(g.induced(comp))
        total += min(len(a), len(b))
    return total


def is_matching(g: Graph) -> bool:
    """True when every vertex has degree exactly one (so g = M_k)."""
    return g.n % 2 == 0 and all(r.bit_count() == 1 for r in g.rows)

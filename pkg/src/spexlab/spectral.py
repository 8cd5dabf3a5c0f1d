"""Spectral radius, Perron vectors and exact radius comparison."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .constructions import turan_part_sizes
from .errors import InputError, NumericError
from .graph import Graph

DEFAULT_TOL = 1e-10
TIE_THRESHOLD = 1e-9
MAX_ITER = 1_000_000


@dataclass(frozen=True)
class SpectralProfile:
    rho: float
    perron: tuple[float, ...]
    residual: float
    iterations: int


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def _component_power(a: np.ndarray, tol: float) -> tuple[float, np.ndarray, float, int]:
    """Power iteration on A + I from the all-ones vector.

    The shift keeps the top eigenvalue strictly dominant for bipartite
    components, whose spectrum is symmetric about zero.
    """
    m = a.shape[0]
    x = np.ones(m) / math.sqrt(m)
    if not a.any():
        return 0.0, x if m == 1 else np.eye(m)[0], 0.0, 0
    rho = 0.0
    for it in range(1, MAX_ITER + 1):
        y = a @ x
        x = y + x
        x /= np.linalg.norm(x)
        if it % 8 == 0 or it < 8:
            ax = a @ x
            rho = float(x @ ax)
            res = float(np.max(np.abs(ax - rho * x)))
            if res <= tol:
                return rho, x, res, it
    raise NumericError(f"power iteration did not converge in {MAX_ITER} steps")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralProfile:
    """rho(G) as the largest component radius, with the Perron vector of the
    lowest-numbered component attaining it."""
    if g.n < 1:
        raise InputError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise InputError("tol must be positive")
    a = adjacency_matrix(g)
    best = None
    total_it = 0
    for comp in g.components():
        sub = a[np.ix_(comp, comp)]
        rho, x, res, it = _component_power(sub, tol)
        total_it += it
        if best is None or rho > best[0] + TIE_THRESHOLD:
            best = (rho, comp, x, res)
    rho, comp, x, res = best
    x = np.abs(x)
    x /= np.linalg.norm(x)
    perron = np.zeros(g.n)
    perron[comp] = x
    full_res = float(np.max(np.abs(a @ perron - rho * perron)))
    return SpectralProfile(rho, tuple(float(v) for v in perron), full_res, total_it)


# exact comparison

def charpoly(g: Graph) -> list[int]:
    """Integer coefficients of det(xI - A), highest degree first
    (Faddeev-LeVerrier; all divisions are exact)."""
    n = g.n
    a = [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        if k == 1:
            m = [[int(i == j) for j in range(n)] for i in range(n)]
        else:
            am = _matmul(a, m)
            c = coeffs[-1]
            m = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        am = _matmul(a, m)
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise NumericError("non-integral Faddeev-LeVerrier step")
        coeffs.append(-tr // k)
    return coeffs


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x) for col in bt] for row in a]


def _strip(p: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _polyrem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        f = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return _strip(a) if a else [Fraction(0)]


def _polydiv(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    out = []
    while len(a) >= len(b):
        f = a[0] / b[0]
        out.append(f)
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return out or [Fraction(0)]


def _squarefree(p: list[Fraction]) -> list[Fraction]:
    g = _polygcd(p, _deriv(p))
    return p if len(g) == 1 else _polydiv(p, g)


def _polygcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while any(b):
        a, b = b, _polyrem(a, b)
    return [c / a[0] for c in a]


def _deriv(p: list[Fraction]) -> list[Fraction]:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [Fraction(0)]


def _sturm(p: list[Fraction]) -> list[list[Fraction]]:
    """Sturm chain of the square-free part of p (so zeros of p at an
    evaluation point never wipe out the whole chain)."""
    p = _squarefree(p)
    seq = [p, _deriv(p)]
    while len(seq[-1]) > 1 or seq[-1][0] != 0:
        r = _polyrem(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append([-c for c in r])
    return seq


def _eval(p: list[Fraction], x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in p:
        v = v * x + c
    return v


def _sign_changes(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = [s for s in (_eval(p, x) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _count_roots(seq: list[list[Fraction]], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b]."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


class _TopRoot:
    """Isolating interval (lo, hi] for the largest real root of p."""

    def __init__(self, coeffs: list[int], bound: int):
        self.p = [Fraction(c) for c in coeffs]
        self.seq = _sturm(self.p)
        self.lo = Fraction(-bound - 1)
        self.hi = Fraction(bound + 1)
        while _count_roots(self.seq, self.lo, self.hi) > 1:
            self.bisect()

    def bisect(self) -> None:
        mid = (self.lo + self.hi) / 2
        if _count_roots(self.seq, mid, self.hi) >= 1:
            self.lo = mid
        else:
            self.hi = mid


def compare_radius_exact(g1: Graph, g2: Graph, tol: float = DEFAULT_TOL) -> int:
    """Sign of rho(g1) - rho(g2): -1, 0 or 1.

    Numeric gaps above ``tol`` decide directly.  Otherwise the largest roots
    of the characteristic polynomials are bracketed with Sturm sequences; the
    radii are equal exactly when each isolating interval contains a root of
    gcd(p1, p2), and otherwise bisection separates them.
    """
    r1 = spectral_radius(g1).rho if g1.n else 0.0
    r2 = spectral_radius(g2).rho if g2.n else 0.0
    if abs(r1 - r2) > tol:
        return 1 if r1 > r2 else -1
    if g1.n == 0 or g2.n == 0:
        return (g1.num_edges() > 0) - (g2.num_edges() > 0)
    p1, p2 = charpoly(g1), charpoly(g2)
    bound = max(g1.n, g2.n)
    t1, t2 = _TopRoot(p1, bound), _TopRoot(p2, bound)
    common = _polygcd([Fraction(c) for c in p1], [Fraction(c) for c in p2])
    if len(common) > 1:
        cseq = _sturm(common)
        if _count_roots(cseq, t1.lo, t1.hi) and _count_roots(cseq, t2.lo, t2.hi):
            return 0
    while True:
        if t1.lo >= t2.hi:
            return 1
        if t2.lo >= t1.hi:
            return -1
        t1.bisect()
        t2.bisect()


# equitable quotients of joins

def _quotient(blocks: list[tuple[int, int]]) -> np.ndarray:
    for size, d in blocks:
        if size < 1 or not 0 <= d < size or (size * d) % 2:
            raise InputError(f"block (size={size}, intra-degree={d}) is not a realisable regular block")
    k = len(blocks)
    sizes = np.array([s for s, _ in blocks], dtype=float)
    # symmetrised quotient D^{1/2} Q D^{-1/2}
    s = np.sqrt(np.outer(sizes, sizes))
    for i, (_, d) in enumerate(blocks):
        s[i, i] = d
    return s if k else np.zeros((0, 0))


def quotient_radius(blocks: list[tuple[int, int]]) -> float:
    """rho of the join of regular blocks given as (size, intra-degree)."""
    if not blocks:
        raise InputError("need at least one block")
    vals = np.linalg.eigvalsh(_quotient(blocks))
    return float(vals[-1])


def quotient_perron(blocks: list[tuple[int, int]]) -> tuple[float, np.ndarray]:
    """rho and the per-block Perron entry (entries are constant on blocks),
    normalised so the lifted vertex vector has unit norm."""
    s = _quotient(blocks)
    vals, vecs = np.linalg.eigh(s)
    y = np.abs(vecs[:, -1])
    sizes = np.array([b[0] for b in blocks], dtype=float)
    # symmetrised eigenvector y = D^{1/2} x, so x = y / sqrt(size)
    x = y / np.sqrt(sizes)
    x /= math.sqrt(float(np.sum(sizes * x * x)))
    return float(vals[-1]), x


def turan_blocks(n: int, p: int) -> list[tuple[int, int]]:
    return [(s, 0) for s in turan_part_sizes(n, p) if s]


def hnpq_blocks(n: int, p: int, q: int) -> list[tuple[int, int]]:
    head = [(q - 1, q - 2)] if q >= 2 else []
    return head + turan_blocks(n - q + 1, p)


def turan_edges(n: int, p: int) -> int:
    sizes = turan_part_sizes(n, p)
    return (n * n - sum(s * s for s in sizes)) // 2


def rayleigh_chain_check(n: int, p: int) -> dict:
    """rho(T_p(n)) >= 2e/n >= (p-1)n/p - p/(4n), and the edge bound."""
    if p < 2 or n < p:
        raise InputError("need p >= 2 and n >= p")
    rho = quotient_radius(turan_blocks(n, p))
    e = turan_edges(n, p)
    avg = Fraction(2 * e, n)
    bound = Fraction((p - 1) * n, p) - Fraction(p, 4 * n)
    e_bound = Fraction((p - 1) * n * n, 2 * p) - Fraction(p, 8)
    regular = n % p == 0
    slack_rho = 0.0 if regular else rho - float(avg)
    # rho >= 2e/n holds with equality for regular T_p(n); compare with a
    # rounding allowance otherwise
    eps = 1e-9 * max(1.0, rho)
    return {
        "n": n,
        "p": p,
        "rho": rho,
        "two_e_over_n": float(avg),
        "lower_bound": float(bound),
        "edges": e,
        "edge_lower_bound": float(e_bound),
        "regular": regular,
        "slack_rho_vs_avg": slack_rho,
        "slack_avg_vs_bound": float(avg - bound),
        "slack_edges": float(e - e_bound),
        "rho_ge_avg": regular or slack_rho >= -eps,
        "avg_ge_bound": avg >= bound,
        "edges_ge_bound": e >= e_bound,
        "strict_middle": not regular and slack_rho > eps,
    }


def perron_ratio_diagnostic(n: int, p: int, q: int) -> float:
    """x_w / x_u on H(n,p,q): w in the K_{q-1} block, u in the first (largest)
    Turan part."""
    if q < 2:
        raise InputError("the ratio needs a nonempty universal block (q >= 2)")
    _, x = quotient_perron(hnpq_blocks(n, p, q))
    return float(x[0] / x[1])

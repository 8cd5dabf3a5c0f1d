"""Summary tables over census records, with the predicted extremal graph."""
from __future__ import annotations

from dataclasses import dataclass

from . import constructions as C
from .canonical import canonical_form
from .census import CensusRecord, consistency_check
from .criticality import criticality_order
from .decomposition import p_value
from .errors import CapacityError, InputError
from .graph import Graph
from .graph6 import decode

MAX_BALLOON_SIDE = 4


@dataclass
class Prediction:
    name: str
    graph6: str | None
    kind: str  # "unique" (EX = {G}) or "member" (G in EX)


def recognise_balloon(h: Graph) -> tuple[int, int] | None:
    """(s, t) if h is a uniform odd ballooning of K_{s,t}, s <= t."""
    lab = h.canonical_label()
    for s in range(1, MAX_BALLOON_SIDE + 1):
        for t in range(s, MAX_BALLOON_SIDE + 1):
            extra = h.n - s - t
            if extra <= 0 or extra % (s * t):
                continue
            ell = extra // (s * t) + 2
            if ell < 5 or ell % 2 == 0:
                continue
            b = C.odd_ballooning(C.BalloonSpec.uniform(C.complete_bipartite(s, t), ell))
            if b.canonical_label() == lab:
                return s, t
    return None


def predict(family: list[Graph], n: int) -> Prediction | None:
    """Extremal graph the asymptotic theory points at, built at this n."""
    try:
        if len(family) == 1:
            st = recognise_balloon(family[0])
            if st is not None and st[0] >= 2:
                s, t = st
                if (s, t) == (2, 2):
                    return Prediction("H'(n,2,2)", C.h_prime_22(n).to_graph6(), "unique")
                if t >= 4:
                    return Prediction(f"G_{s},{t}", C.g_st(n, s, t).to_graph6(), "unique")
                return Prediction("G_3,3", C.g33_prime(n).to_graph6(), "member")
        p = p_value(family)
        if p < 2:
            return None
        q, _ = criticality_order(family)
        if q is None:
            return None
        name = f"T_{p}(n)" if q == 1 else f"H(n,{p},{q})"
        return Prediction(name, C.hnpq(n, p, q).to_graph6(), "unique")
    except (InputError, CapacityError):
        return None


def _canon(g6: str) -> str:
    return canonical_form(decode(g6)).decode("ascii")


def rows(records: list[CensusRecord]) -> list[dict]:
    out = []
    for rec in sorted(records, key=lambda r: (r.forbidden, r.n, r.mode)):
        family = [decode(s) for s in rec.forbidden]
        pred = predict(family, rec.n)
        match: str = "n/a"
        if pred is not None and pred.graph6 is not None:
            label = _canon(pred.graph6)
            if pred.kind == "unique":
                match = "yes" if rec.ex_graphs == [label] else "no"
            else:
                match = "yes" if label in rec.ex_graphs else "no"
        out.append({
            "forbidden": ",".join(rec.forbidden),
            "n": rec.n,
            "mode": rec.mode,
            "ex": rec.ex,
            "ex_count": len(rec.ex_graphs),
            "spex": rec.spex,
            "spex_count": len(rec.spex_graphs),
            "consistent": consistency_check(rec),
            "prediction": pred.name if pred else None,
            "match": match,
        })
    return out


COLUMNS = ("forbidden", "n", "mode", "ex", "ex_count", "spex", "spex_count", "consistent", "prediction", "match")


def render(table: list[dict]) -> str:
    def fmt(v) -> str:
        if isinstance(v, float):
            return f"{v:.10f}"
        if v is None:
            return "-"
        if v is True:
            return "true"
        if v is False:
            return "false"
        return str(v)

    cells = [list(COLUMNS)] + [[fmt(r[c]) for c in COLUMNS] for r in table]
    widths = [max(len(row[i]) for row in cells) for i in range(len(COLUMNS))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells) + "\n"

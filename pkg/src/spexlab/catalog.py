"""Name grammar for graphs on the command line.

Accepted forms::

    petersen | dodecahedron | K3 | C5 | S4 | M2 | E3 | P4 | F2 | W6 | K2,3
    name:key=value,key=value      e.g. turan:n=10,p=2  hnpq:n=12,p=2,q=3
    balloon:base=<graph>,len=5
    <graph6 string>
"""
from __future__ import annotations

import re
from collections.abc import Callable

from . import constructions as C
from .errors import InputError
from .graph import Graph
from .graph6 import decode

_BUILDERS: dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    "petersen": (C.petersen, ()),
    "dodecahedron": (C.dodecahedron, ()),
    "kneser": (C.kneser, ("t", "k")),
    "friendship": (C.friendship, ("k",)),
    "complete": (C.complete, ("k",)),
    "cycle": (C.cycle, ("k",)),
    "star": (C.star, ("k",)),
    "matching": (C.matching, ("k",)),
    "empty": (C.empty, ("t",)),
    "path": (C.path, ("k",)),
    "wheel": (C.wheel, ("k",)),
    "complete_bipartite": (C.complete_bipartite, ("s", "t")),
    "turan": (C.turan, ("n", "p")),
    "hnpq": (C.hnpq, ("n", "p", "q")),
    "h_t1t1": (C.h_t1t1, ("t",)),
    "gst": (C.g_st, ("n", "s", "t")),
    "g33_prime": (C.g33_prime, ("n",)),
    "hprime22": (C.h_prime_22, ("n",)),
}

_SHORT = {
    "K": C.complete, "C": C.cycle, "S": C.star, "M": C.matching,
    "E": C.empty, "P": C.path, "F": C.friendship, "W": C.wheel,
}

NAMES = tuple(sorted(_BUILDERS)) + ("balloon",)


def catalog(name: str, **params: int) -> Graph:
    """Build a named graph, e.g. ``catalog("kneser", t=6)``."""
    if name not in _BUILDERS:
        raise InputError(f"unknown catalog graph {name!r}; known: {', '.join(NAMES)}")
    fn, keys = _BUILDERS[name]
    unknown = set(params) - set(keys)
    if unknown:
        raise InputError(f"{name} takes parameters {keys}, got {sorted(unknown)}")
    if name == "kneser" and "k" not in params:
        params["k"] = 2
    missing = [k for k in keys if k not in params]
    if missing:
        raise InputError(f"{name} needs parameters {missing}")
    return fn(**params)


def _split_params(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    last = None
    for tok in text.split(","):
        if "=" in tok:
            key, val = tok.split("=", 1)
            out[key.strip()] = val.strip()
            last = key.strip()
        elif last is not None:
            out[last] += "," + tok
        else:
            raise InputError(f"cannot parse parameters {text!r}")
    return out


def parse_graph(text: str) -> Graph:
    s = text.strip()
    m = re.fullmatch(r"([KCSMEPFW])(\d+)", s)
    if m:
        return _SHORT[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"K(\d+),(\d+)", s)
    if m:
        return C.complete_bipartite(int(m.group(1)), int(m.group(2)))
    name, _, rest = s.partition(":")
    if name == "balloon":
        params = _split_params(rest)
        if set(params) != {"base", "len"}:
            raise InputError("balloon needs base=<graph>,len=<odd int >= 5>")
        base = parse_graph(params["base"])
        return C.odd_ballooning(C.BalloonSpec.uniform(base, _int(params["len"])))
    if name in _BUILDERS:
        params = _split_params(rest) if rest else {}
        return catalog(name, **{k: _int(v) for k, v in params.items()})
    try:
        return decode(s)
    except InputError:
        raise InputError(f"{text!r} is neither a catalog name nor a graph6 string") from None


def _int(v: str) -> int:
    try:
        return int(v)
    except ValueError:
        raise InputError(f"expected an integer, got {v!r}") from None

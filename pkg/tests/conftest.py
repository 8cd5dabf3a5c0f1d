from __future__ import annotations

import json
from importlib import resources
from itertools import combinations

import networkx as nx
import pytest

from spexlab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def atlas(lo: int, hi: int) -> list[Graph]:
    """Every isomorphism class on lo..hi vertices (hi <= 7)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if lo <= h.number_of_nodes() <= hi]


def all_labelled(n: int):
    pairs = list(combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if m >> i & 1])


def load_schema(kind: str) -> dict:
    return json.loads(resources.files("spexlab").joinpath(f"schemas/{kind}.json").read_text())


@pytest.fixture(scope="session")
def validate():
    import jsonschema
    from referencing import Registry, Resource

    kinds = ["census-record", "construct", "critical", "decomp", "manifest", "report", "spectral", "verify"]
    schemas = {k: load_schema(k) for k in kinds}
    registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())

    def check(doc: dict) -> None:
        kind = doc["schema"].split("/")[1]
        jsonschema.Draft202012Validator(schemas[kind], registry=registry).validate(doc)

    return check


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[num])

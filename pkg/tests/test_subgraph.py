from __future__ import annotations

import random

from hypothesis import given, settings
from networkx.algorithms.isomorphism import GraphMatcher

from spexlab.constructions import complete, complete_bipartite, cycle, petersen
from spexlab.graph import Graph
from spexlab.subgraph import contains_subgraph, find_subgraph, is_embedding, is_free

from .conftest import atlas, to_nx
from .test_graph import graphs


def nx_contains(host: Graph, pattern: Graph) -> bool:
    return GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_monomorphic()


def test_examples():
    assert contains_subgraph(complete(3), complete(2))
    assert not contains_subgraph(complete_bipartite(2, 3), complete(3))
    w = find_subgraph(petersen(), cycle(5))
    assert w is not None and is_embedding(petersen(), cycle(5), w)
    assert not contains_subgraph(cycle(4), cycle(5))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8), graphs(max_n=6))
def test_agrees_with_networkx(host, pattern):
    got = find_subgraph(host, pattern)
    assert (got is not None) == nx_contains(host, pattern)
    if got is not None:
        assert is_embedding(host, pattern, got)


def test_anchored_matches_definition():
    rnd = random.Random(3)
    small = [g for g in atlas(2, 4) if g.num_edges()]
    for _ in range(150):
        n = rnd.randint(3, 8)
        host = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.5])
        pat = rnd.choice(small)
        for a in range(n):
            got = find_subgraph(host, pat, anchor=a)
            # brute definition: some copy uses a, i.e. host minus a loses every copy
            without = host.induced([v for v in range(n) if v != a])
            expect = contains_subgraph(host, pat) and not (
                contains_subgraph(without, pat) and all_copies_avoid(host, pat, a))
            if got is not None:
                assert a in got and is_embedding(host, pat, got)
            assert (got is not None) == expect


def all_copies_avoid(host: Graph, pat: Graph, a: int) -> bool:
    m = GraphMatcher(to_nx(host), to_nx(pat))
    return all(a not in mp for mp in m.subgraph_monomorphisms_iter())


def test_reflexive_and_transitive_on_corpus():
    corpus = atlas(1, 5)
    for g in corpus:
        assert contains_subgraph(g, g)
    rnd = random.Random(11)
    for _ in range(400):
        a, b, c = (rnd.choice(corpus) for _ in range(3))
        if contains_subgraph(a, b) and contains_subgraph(b, c):
            assert contains_subgraph(a, c)


def test_is_free():
    assert is_free(complete_bipartite(3, 3), [complete(3), cycle(5)])
    assert not is_free(petersen(), [complete(3), cycle(5)])

from __future__ import annotations

import pytest

from spexlab.canonical import canonical_form
from spexlab.constructions import (
    BalloonSpec,
    complete,
    complete_bipartite,
    cycle,
    friendship,
    matching,
    odd_ballooning,
    path,
    petersen,
    star,
    wheel,
)
from spexlab.decomposition import (
    DecompositionFamily,
    b_family,
    beta_gamma,
    decomposition_family,
    has_bipartite_member,
    has_star_and_matching,
    naive_member_check,
    p_value,
    q_value,
    smallest_matching_member,
)
from spexlab.errors import CapacityError, InputError
from spexlab.graph import Graph
from spexlab.subgraph import contains_subgraph

from .oracles import brute_q, chromatic_corpus, naive_family


def labels(graphs) -> set[bytes]:
    return {canonical_form(g) for g in graphs}


def synthetic(*members: Graph) -> DecompositionFamily:
    return DecompositionFamily(tuple(members), 2, 0, ())


def test_p_value():
    assert p_value([complete(3)]) == 2
    assert p_value([complete(4), cycle(5)]) == 2
    assert p_value([petersen()]) == 2
    assert p_value([complete(5)]) == 4
    with pytest.raises(InputError):
        p_value([])


def test_naive_member_check_examples():
    assert naive_member_check(complete(3), complete(2), 3)
    with pytest.raises(InputError):
        naive_member_check(complete(2), complete(2), 2)
    assert not naive_member_check(friendship(2), complete(2), 5)
    with pytest.raises(InputError):
        naive_member_check(complete(3), complete(2), 2)
    with pytest.raises(CapacityError):
        naive_member_check(complete(3), complete(2), 40)


def test_family_examples():
    assert labels(decomposition_family([complete(3)]).members) == labels([complete(2)])
    assert labels(decomposition_family([cycle(5)]).members) == labels([complete(2)])
    f2 = decomposition_family([friendship(2)])
    assert labels(f2.members) == labels([matching(2), star(3)])
    assert beta_gamma(f2) == (1, 1)
    assert labels(b_family(f2)) == labels([complete(1)])
    assert smallest_matching_member(f2) == 2
    assert smallest_matching_member(decomposition_family([complete(3)])) == 1
    assert smallest_matching_member(decomposition_family([wheel(6)])) is None


def test_family_p3():
    df = decomposition_family([complete(4)])
    assert df.p == 3 and labels(df.members) == labels([complete(2)])
    assert naive_family(complete(4)) == set(df.labels())


def test_family_members_are_minimal_and_valid():
    for h in chromatic_corpus(4, 5):
        df = decomposition_family([h])
        ms = df.members
        for a in ms:
            assert not a.isolated_vertices()
            assert naive_member_check(h, a, h.n)
            for b in ms:
                if a is not b:
                    assert not (contains_subgraph(a, b) and contains_subgraph(b, a))
                    if a.num_edges() > b.num_edges():
                        assert not contains_subgraph(a, b)
        assert has_bipartite_member(df)


def test_stability_in_t():
    for h in chromatic_corpus(4, 5):
        df = decomposition_family([h])
        again = decomposition_family([h], t_override=df.t_used + 1)
        assert again.labels() == df.labels()


def test_beta_gamma_examples():
    for q in range(1, 5):
        assert beta_gamma(synthetic(matching(q))) == (q, q)
    b = odd_ballooning(BalloonSpec.uniform(complete_bipartite(2, 2), 5))
    df = decomposition_family([b])
    assert beta_gamma(df) == (2, 2)
    assert labels(b_family(df)) == labels([complete(2)])
    assert labels(b_family(synthetic(path(4)))) == labels([complete(2)])


def test_b_family_when_beta_below_gamma():
    # gamma only looks at bipartite members
    df = synthetic(cycle(5), complete_bipartite(2, 3))
    beta, gamma = beta_gamma(df)
    assert (beta, gamma) == (2, 2)
    df = synthetic(complete(3), matching(3))
    beta, gamma = beta_gamma(df)
    assert (beta, gamma) == (2, 3)
    got = b_family(df)
    # only the triangle has a cover smaller than gamma
    assert labels(got) == labels([complete(2)])


def test_q_value_examples():
    assert q_value(complete(3)) == 1
    assert q_value(petersen()) == 3
    assert q_value(friendship(2)) == 1


def test_q_value_matches_brute_force():
    for h in chromatic_corpus(4, 6):
        p = p_value([h])
        assert q_value(h) == brute_q(h, p)


def test_star_and_matching_predicate():
    assert has_star_and_matching(decomposition_family([complete(3)]))
    assert has_star_and_matching(decomposition_family([friendship(2)]))
    assert not has_star_and_matching(decomposition_family([wheel(6)]))


def test_capacity_limits():
    with pytest.raises(CapacityError):
        decomposition_family([complete(17)])

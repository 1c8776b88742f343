import pytest
from hypothesis import given, settings

from oracles import graphs
from tamegraph import (
    Graph,
    GraphInputError,
    enumerate_minseps_brute,
    enumerate_pmcs_brute,
    enumerate_pmcs_from_minseps,
    is_pmc,
)
from tamegraph.generators import complete, edgeless, path, prism

P4 = path(4)


def members(records):
    return [r.members for r in records]


def test_is_pmc_examples():
    assert all(is_pmc(edgeless(4), [v]) for v in range(4))
    assert is_pmc(P4, [1, 2])
    assert not is_pmc(P4, [0, 2])
    with pytest.raises(GraphInputError):
        is_pmc(P4, [])


def test_brute_examples():
    assert members(enumerate_pmcs_brute(P4)) == [(0, 1), (1, 2), (2, 3)]
    assert members(enumerate_pmcs_brute(complete(5))) == [(0, 1, 2, 3, 4)]
    assert members(enumerate_pmcs_brute(edgeless(4))) == [(0,), (1,), (2,), (3,)]


def test_record_lists_component_neighbourhoods():
    rec = enumerate_pmcs_brute(P4)[1]
    assert rec.members == (1, 2)
    assert rec.component_neighborhoods == ((1,), (2,))


def test_from_minseps_examples():
    for g in (P4, prism(3), complete(5)):
        a = enumerate_minseps_brute(g)
        b = enumerate_pmcs_from_minseps(g, a)
        assert b == enumerate_pmcs_brute(g)
        assert len(b) <= g.n * (len(a) ** 2 + len(a) + 1)
    assert len(enumerate_pmcs_from_minseps(P4, enumerate_minseps_brute(P4))) == 3
    assert members(enumerate_pmcs_from_minseps(complete(5), [])) == [(0, 1, 2, 3, 4)]


def test_triangle_with_private_pendants():
    # every component of G - {5,6,7} sees a single vertex of the triangle
    g = Graph(8, [(0, 5), (1, 7), (2, 6), (4, 5), (5, 6), (5, 7), (6, 7)])
    got = members(enumerate_pmcs_from_minseps(g, enumerate_minseps_brute(g)))
    assert (5, 6, 7) in got
    assert got == members(enumerate_pmcs_brute(g))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_from_minseps_matches_brute(g):
    a = enumerate_minseps_brute(g)
    b = enumerate_pmcs_from_minseps(g, a)
    assert b == enumerate_pmcs_brute(g)
    na, nb = len(a), len(b)
    assert nb <= g.n * (na * na + na + 1)
    assert na <= g.n * nb
    if g.n:
        assert nb >= 1
    for rec in b:
        assert is_pmc(g, rec.members)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from oracles import graphs
from tamegraph import (
    GraphInputError,
    WeightedGraph,
    enumerate_minseps_brute,
    enumerate_pmcs_brute,
    mwis_brute,
    mwis_pmc,
)
from tamegraph.generators import complete, cycle, edgeless, path, prism
from tamegraph.mwis import blocks


def solve(g, weights):
    wg = WeightedGraph(g, tuple(weights))
    return mwis_pmc(wg, enumerate_pmcs_brute(g), enumerate_minseps_brute(g))


def test_brute_examples():
    assert mwis_brute(WeightedGraph(path(4), (1,) * 4))[0] == 2
    assert mwis_brute(WeightedGraph(complete(4), (5, 1, 1, 1))) == (5, (0,))
    assert mwis_brute(WeightedGraph(cycle(5), (1,) * 5))[0] == 2


def test_pmc_examples():
    assert solve(path(4), [1] * 4)[0] == 2
    assert solve(prism(3), [1] * 6)[0] == 2
    assert solve(edgeless(4), [1, 2, 3, 4]) == (10, (0, 1, 2, 3))
    assert solve(edgeless(0), []) == (0, ())


def test_weight_validation():
    with pytest.raises(GraphInputError):
        WeightedGraph(path(3), (1, 2))
    with pytest.raises(GraphInputError):
        WeightedGraph(path(3), (1, -2, 0))


def test_incomplete_pmcs_rejected():
    g = path(4)
    wg = WeightedGraph(g, (1,) * 4)
    with pytest.raises(GraphInputError):
        mwis_pmc(wg, enumerate_pmcs_brute(g)[:1], enumerate_minseps_brute(g))


def test_bag_limit():
    g = complete(6)
    with pytest.raises(GraphInputError):
        mwis_pmc(WeightedGraph(g, (1,) * 6), enumerate_pmcs_brute(g), [], bag_limit=5)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.integers(0, 2**32))
def test_matches_brute(g, seed):
    rng = random.Random(seed)
    weights = [rng.randint(0, 10) for _ in range(g.n)]
    seps = enumerate_minseps_brute(g)
    weight, chosen = solve(g, weights)
    assert weight == mwis_brute(WeightedGraph(g, tuple(weights)))[0]
    assert oracles.is_independent(g, chosen)
    assert sum(weights[v] for v in chosen) == weight
    assert len(blocks(g, seps)) <= g.n * len(seps) + 1

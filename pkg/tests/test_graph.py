import networkx as nx
import pytest
from hypothesis import given

from oracles import adjacency, comps, graphs, nbhd, to_nx
from tamegraph import Graph, GraphInputError, complement, components, induced, neighborhood
from tamegraph.generators import complete, cycle, edgeless, path, prism

P4 = path(4)  # a-b-c-d as 0-1-2-3


def test_neighborhood_examples():
    assert neighborhood(P4, [0]) == (1,)
    assert neighborhood(P4, []) == ()
    assert neighborhood(prism(3), [0, 1, 2]) == (3, 4, 5)


def test_neighborhood_rejects_bad_vertex():
    with pytest.raises(GraphInputError):
        neighborhood(P4, [4])
    with pytest.raises(GraphInputError):
        neighborhood(P4, [-1])


def test_components_examples():
    assert components(P4, [1]) == [(0,), (2, 3)]
    assert components(edgeless(3)) == [(0,), (1,), (2,)]
    assert components(cycle(4), [0, 2]) == [(1,), (3,)]


def test_complement_examples():
    assert complement(complete(3)) == edgeless(3)
    assert complement(edgeless(2)) == complete(2)
    assert nx.is_isomorphic(to_nx(complement(cycle(5))), to_nx(cycle(5)))


def test_induced_examples():
    h, labels = induced(P4, [0, 1])
    assert h == complete(2) and labels == (0, 1)
    h, labels = induced(P4, [])
    assert h.n == 0 and labels == ()
    h, labels = induced(prism(3), [0, 1, 2, 3])
    assert labels == (0, 1, 2, 3)
    assert h.edges() == [(0, 1), (0, 2), (0, 3), (1, 2)]


def test_graph_validation():
    with pytest.raises(GraphInputError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphInputError):
        Graph(2, [(0, 2)])
    with pytest.raises(GraphInputError):
        Graph(-1)
    with pytest.raises(GraphInputError):
        Graph.from_masks([0b10, 0b00])


def test_graph_is_immutable_and_hashable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.foo = 1
    assert {g, path(3)} == {g}
    assert g.m == 2


@given(graphs())
def test_graph_invariants(g):
    adj = adjacency(g)
    for v in range(g.n):
        assert v not in adj[v]
        for u in adj[v]:
            assert v in adj[u]
    assert complement(complement(g)) == g


@given(graphs())
def test_components_partition(g):
    adj = adjacency(g)
    removed = {v for v in range(g.n) if v % 3 == 0}
    parts = components(g, sorted(removed))
    expected = comps(adj, set(range(g.n)) - removed)
    assert [frozenset(p) for p in parts] == expected
    assert sorted(v for p in parts for v in p) == sorted(set(range(g.n)) - removed)
    assert [p[0] for p in parts] == sorted(p[0] for p in parts)


@given(graphs(min_n=1))
def test_neighborhood_matches_union(g):
    adj = adjacency(g)
    s = [v for v in range(g.n) if v % 2 == 0]
    out = neighborhood(g, s)
    assert set(out) == nbhd(adj, s)
    assert not set(out) & set(s)


@given(graphs())
def test_induced_matches_networkx(g):
    keep = [v for v in range(g.n) if v != 1]
    h, labels = induced(g, keep)
    sub = nx.relabel_nodes(to_nx(g).subgraph(keep), {v: i for i, v in enumerate(labels)})
    assert sorted(h.edges()) == sorted(tuple(sorted(e)) for e in sub.edges())

import pytest
from hypothesis import given, settings

import oracles
from oracles import graphs
from tamegraph import GraphInputError, clique_number, find_induced_path, is_pt_free
from tamegraph.generators import complete, cycle, edgeless, path, prism


def test_find_induced_path_examples():
    assert find_induced_path(path(6), 6) == [0, 1, 2, 3, 4, 5]
    assert find_induced_path(prism(4), 5) is None
    assert find_induced_path(complete(3), 4) is None
    assert find_induced_path(cycle(6), 5) == [0, 1, 2, 3, 4]
    with pytest.raises(GraphInputError):
        find_induced_path(path(3), 0)


@pytest.mark.parametrize("n", range(2, 7))
def test_prisms_are_p5_free(n):
    assert is_pt_free(prism(n), 5)


def test_is_pt_free_examples():
    assert not is_pt_free(path(7), 6)
    assert all(is_pt_free(edgeless(n), 2) for n in range(6))
    assert is_pt_free(edgeless(0), 1)
    assert not is_pt_free(edgeless(1), 1)


def test_clique_number_examples():
    assert clique_number(complete(5)) == 5
    assert clique_number(cycle(5)) == 2
    assert clique_number(edgeless(0)) == 0
    assert clique_number(edgeless(3)) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_prism_clique_number(n):
    assert clique_number(prism(n)) == n == oracles.clique_number(prism(n))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_clique_number_matches_networkx(g):
    assert clique_number(g) == oracles.clique_number(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_induced_path_matches_brute_force(g):
    present = []
    for t in range(1, 7):
        found = find_induced_path(g, t)
        assert (found is not None) == oracles.has_induced_path(g, t)
        if found is not None:
            assert len(found) == t and oracles.is_induced_path(g, found)
        present.append(found is not None)
    # containing P_t implies containing every shorter path
    assert present == sorted(present, reverse=True)

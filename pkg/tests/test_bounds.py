import json

import pytest
from hypothesis import given, settings

from oracles import graphs
from tamegraph import GraphInputError, verify_bounds
from tamegraph.generators import edgeless, path, prism

NAMES = ["MINSEP_MAIN", "MINSEP_REFINED", "PMC_MAIN", "BT_B", "BT_A", "STRONG", "CONNMOD"]


def test_edgeless():
    r = verify_bounds(edgeless(5))
    assert (r.a, r.b, r.k) == (0, 5, 1)
    assert r.ok and all(c.passed for c in r.checks)
    assert "MINSEP_REFINED" not in [c.name for c in r.checks]


def test_prism3():
    r = verify_bounds(prism(3))
    assert (r.n, r.k, r.a) == (6, 3, 6)
    refined = r.check("MINSEP_REFINED")
    assert (refined.lhs, refined.rhs) == (6, 12**3 * 11)


def test_path4():
    r = verify_bounds(path(4))
    assert (r.n, r.k, r.a, r.b) == (4, 2, 2, 3)
    bt = r.check("BT_B")
    assert (bt.lhs, bt.rhs) == (3, 28)
    assert [c.name for c in r.checks] == NAMES


def test_exact_large_rhs():
    r = verify_bounds(prism(8))
    assert r.method == "brute"
    assert r.check("PMC_MAIN").rhs == 2**18 * 16**19
    r = verify_bounds(prism(8), limit=10)
    assert r.method == "generic" and r.a == 254


def test_non_p6free_checks_are_informational():
    r = verify_bounds(path(8))
    assert not r.is_p6_free
    assert all(r.required(c) == (c.name in ("STRONG", "BT_A", "BT_B")) for c in r.checks)


def test_serialisation():
    r = verify_bounds(path(4))
    doc = json.loads(r.to_json())
    assert (doc["n"], doc["k"], doc["a"], doc["b"]) == (4, 2, 2, 3)
    assert [c["name"] for c in doc["checks"]] == NAMES
    assert set(doc["checks"][0]) >= {"name", "lhs", "rhs", "pass"}
    text = r.to_text().splitlines()
    assert "check BT_B 3 <= 28 PASS" in text and text[-1] == "ok true"


def test_empty_graph_rejected():
    with pytest.raises(GraphInputError):
        verify_bounds(edgeless(0))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_required_checks_hold(g):
    r = verify_bounds(g)
    assert r.ok
    if r.is_p6_free:
        assert all(c.passed for c in r.checks)

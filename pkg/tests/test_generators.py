import pytest

from tamegraph import Graph, GraphInputError, enumerate_minseps_brute, enumerate_pmcs_brute
from tamegraph.generators import (
    Family,
    GenSpec,
    SplitMix64,
    complete,
    cycle,
    edgeless,
    gnp,
    p7free_many_separators,
    path,
    prism,
)
from tamegraph.io import to_graph6


def test_prism_shapes():
    assert prism(2) == Graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    g = prism(3)
    assert (g.n, g.m) == (6, 9)
    assert len(enumerate_minseps_brute(prism(4))) == 14


def test_standard_families():
    assert [r.separator for r in enumerate_minseps_brute(path(4))] == [(1,), (2,)]
    assert len(enumerate_pmcs_brute(complete(4))) == 1
    assert enumerate_minseps_brute(edgeless(3)) == []
    assert len(enumerate_pmcs_brute(edgeless(3))) == 3
    assert cycle(3).edges() == [(0, 1), (0, 2), (1, 2)]
    assert path(0).n == 0 and path(1).m == 0
    with pytest.raises(GraphInputError):
        cycle(2)
    with pytest.raises(GraphInputError):
        prism(0)


def test_splitmix_vectors():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_gnp():
    assert gnp(7, 0.0, 3) == edgeless(7)
    assert gnp(7, 1.0, 3) == complete(7)
    assert gnp(8, 0.5, 99) == gnp(8, 0.5, 99)
    assert to_graph6(gnp(8, 0.5, 42)) == "GUfbLo"
    with pytest.raises(GraphInputError):
        gnp(3, 1.5, 0)


def test_genspec_parse():
    assert GenSpec.parse("prism:3").build() == prism(3)
    spec = GenSpec.parse("gnp:8:0.5:42")
    assert spec == GenSpec(Family.GNP, 8, 0.5, 42)
    assert GenSpec.parse("gnp:8:0.5", seed=42).build() == spec.build()
    for bad in ("gnp:8:0.5", "cube:3", "prism", "prism:x", "path:3:0.5", "gnp:3:2:1"):
        with pytest.raises(GraphInputError):
            GenSpec.parse(bad)


def test_p7free_family_is_not_provided():
    with pytest.raises(NotImplementedError):
        p7free_many_separators(3)

import pytest

from unipolar.graph import Graph, complement, is_clique, is_independent
from unipolar.optimize import (
    CliqueCover,
    Coloring,
    OptimizeError,
    gs_max_clique,
    gs_max_independent_set,
    gs_min_clique_cover,
    gs_min_coloring,
    max_clique_unipolar,
    max_independent_set_unipolar,
    min_clique_cover_unipolar,
    min_coloring_unipolar,
)
from unipolar.oracle import (
    GeneratorConfig,
    brute_alpha,
    brute_chi,
    brute_omega,
    brute_theta,
    gen_named,
    gen_random_co_unipolar,
    gen_random_unipolar,
)
from unipolar.recognition import CliqueSplit, GsResult, Variant, generalized_split_test

P5_SPLIT = CliqueSplit.of({2, 3}, [{0, 1}, {4}])


def test_p5_values():
    g = gen_named("P5")
    mis = max_independent_set_unipolar(g, P5_SPLIT)
    assert len(mis) == 3 and is_independent(g, mis)
    assert len(max_clique_unipolar(g, P5_SPLIT)) == 2
    assert len(min_clique_cover_unipolar(g, P5_SPLIT)) == 3
    assert min_coloring_unipolar(g, P5_SPLIT).palette_size == 2


def test_k1_3_star():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    cs = CliqueSplit.of({0}, [{1}, {2}, {3}])
    assert max_independent_set_unipolar(g, cs) == {1, 2, 3}
    cover = min_clique_cover_unipolar(g, cs)
    assert len(cover) == 3 and cover.is_valid(g)
    assert max_clique_unipolar(g, cs) in ({0, 1}, {0, 2}, {0, 3})


def test_clique_only():
    g = gen_named("K5")
    cs = CliqueSplit.of(range(5))
    assert max_clique_unipolar(g, cs) == frozenset(range(5))
    assert len(max_independent_set_unipolar(g, cs)) == 1
    assert len(min_clique_cover_unipolar(g, cs)) == 1
    assert min_coloring_unipolar(g, cs).color == (1, 2, 3, 4, 5)


def test_c6_via_complement():
    g = gen_named("C6")
    r = generalized_split_test(g)
    assert r.variant is Variant.CO_UNIPOLAR
    assert len(gs_max_independent_set(g, r)) == 3
    assert len(gs_max_clique(g, r)) == 2
    assert len(gs_min_clique_cover(g, r)) == 3
    col = gs_min_coloring(g, r)
    assert col.palette_size == 2 and col.is_proper(g)


def test_prism():
    g = gen_named("prism")
    r = generalized_split_test(g)
    assert (len(gs_max_independent_set(g, r)), len(gs_max_clique(g, r))) == (2, 3)
    assert (len(gs_min_clique_cover(g, r)), gs_min_coloring(g, r).palette_size) == (2, 3)


def test_rejects_bad_split_and_neither():
    with pytest.raises(OptimizeError):
        max_clique_unipolar(gen_named("C4"), CliqueSplit.of({0}, [{1}, {2}, {3}]))
    with pytest.raises(OptimizeError):
        gs_max_clique(gen_named("C5"), GsResult(Variant.NEITHER))


def test_witness_checks_reject_bad_objects():
    g = gen_named("P3")
    assert not Coloring((1, 1, 2)).is_proper(g)
    assert not Coloring((1, 3, 1)).is_proper(g)  # gap in the palette
    assert not CliqueCover((frozenset({0, 2}), frozenset({1}))).is_valid(g)
    assert not CliqueCover((frozenset({0, 1}),)).is_valid(g)


def _check(g, r):
    mis, clq = gs_max_independent_set(g, r), gs_max_clique(g, r)
    cover, col = gs_min_clique_cover(g, r), gs_min_coloring(g, r)
    assert is_independent(g, mis) and is_clique(g, clq)
    assert cover.is_valid(g) and col.is_proper(g)
    got = (len(mis), len(clq), len(cover), col.palette_size)
    assert got == (brute_alpha(g), brute_omega(g), brute_theta(g), brute_chi(g))
    assert got[0] == got[2] and got[1] == got[3]


def test_random_against_oracles():
    for i in range(500):
        n = 1 + i % 12
        cfg = GeneratorConfig(seed=1000 + i, n=n, k=(i * 7) % (n + 1), q=(i % 11) / 10)
        if i % 2:
            g, cs = gen_random_co_unipolar(cfg)
            _check(g, GsResult(Variant.CO_UNIPOLAR, cs))
        else:
            g, cs = gen_random_unipolar(cfg)
            _check(g, GsResult(Variant.UNIPOLAR, cs))
        _check(g, generalized_split_test(g))
        _check(g, generalized_split_test(g, prefer_complement=True))


def test_complement_duality():
    for i in range(100):
        g, cs = gen_random_unipolar(GeneratorConfig(seed=i, n=10, k=3, q=0.4))
        h = complement(g)
        r = GsResult(Variant.CO_UNIPOLAR, cs)
        assert len(gs_max_clique(h, r)) == len(max_independent_set_unipolar(g, cs))
        assert gs_min_coloring(h, r).palette_size == len(min_clique_cover_unipolar(g, cs))

import pytest

from unipolar.graph import Graph, complement
from unipolar.oracle import (
    GeneratorConfig,
    OracleError,
    XorShift64Star,
    brute_alpha,
    brute_chi,
    brute_maximal_cliques,
    brute_omega,
    brute_perfect_codes,
    brute_theta,
    brute_unipolar,
    gen_all_graphs,
    gen_gnp,
    gen_named,
    gen_random_bipartite,
    gen_random_co_unipolar,
    gen_random_formula,
    gen_random_unipolar,
    splitmix64,
)
from unipolar.recognition import validate_clique_split


def test_prng_is_reproducible():
    a, b = XorShift64Star(42), XorShift64Star(42)
    assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]
    assert XorShift64Star(1).next_u64() != XorShift64Star(2).next_u64()


def test_prng_pinned_values():
    # splitmix64(0) is the published reference value; the rest are frozen
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    rng = XorShift64Star(0)
    first = [rng.next_u64() for _ in range(3)]
    assert first == [0x7BBCB40D550682D0, 0xDE7FE413D00CC9FD, 0xB3C638353C668C91]


def test_prng_ranges():
    rng = XorShift64Star(5)
    xs = [rng.random() for _ in range(2000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert 0.4 < sum(xs) / len(xs) < 0.6
    ys = [rng.below(7) for _ in range(7000)]
    assert set(ys) == set(range(7))
    assert all(3 <= rng.randint(3, 5) <= 5 for _ in range(100))
    with pytest.raises(ValueError):
        rng.below(0)
    items = list(range(10))
    rng.shuffle(items)
    assert sorted(items) == list(range(10))
    assert len(set(rng.sample(range(20), 5))) == 5


def test_named_graphs():
    assert gen_named("P5").edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert gen_named("C4").m == 4
    assert gen_named("K4").m == 6
    assert gen_named("3K4").n == 12 and gen_named("3K4").m == 18
    prism = gen_named("prism")
    assert prism.edges() == sorted([(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (1, 4), (2, 5)])
    assert gen_named("co-C6") == prism
    gc = gen_named("G_c")
    assert gc.n == 8 and gc.m == 8
    for bad in ["Q5", "3P4", "C2", "co-"]:
        with pytest.raises(OracleError):
            gen_named(bad)


def test_brute_values_on_named():
    expect = {"P5": (3, 2, 2, 3), "C5": (2, 2, 3, 3), "C6": (3, 2, 2, 3), "prism": (2, 3, 3, 2)}
    for name, vals in expect.items():
        g = gen_named(name)
        assert (brute_alpha(g), brute_omega(g), brute_chi(g), brute_theta(g)) == vals


def test_brute_unipolar_named():
    assert brute_unipolar(gen_named("P5")) is not None
    assert brute_unipolar(gen_named("C5")) is None
    assert brute_unipolar(gen_named("C6")) is None
    assert brute_unipolar(gen_named("prism")) is not None
    assert brute_unipolar(gen_named("G_c")) is None
    assert brute_unipolar(gen_named("co-G_c")) is None


def test_refusal_bounds():
    with pytest.raises(OracleError):
        brute_unipolar(gen_named("P17"))
    with pytest.raises(OracleError):
        brute_omega(gen_named("P21"))
    with pytest.raises(OracleError):
        brute_chi(gen_named("P15"))
    with pytest.raises(OracleError):
        brute_perfect_codes(gen_named("P17"))
    with pytest.raises(OracleError):
        list(gen_all_graphs(7))


def test_gen_all_graphs_count():
    assert sum(1 for _ in gen_all_graphs(4)) == 64
    assert [g.m for g in gen_all_graphs(2)] == [0, 1]


def test_planted_generators():
    for seed in range(50):
        cfg = GeneratorConfig(seed=seed, n=9, k=seed % 5, q=0.5)
        g, cs = gen_random_unipolar(cfg)
        assert validate_clique_split(g, cs) and cs.k == seed % 5
        h, cs2 = gen_random_co_unipolar(cfg)
        assert cs2 == cs and complement(h) == g
        assert gen_random_unipolar(cfg) == (g, cs)
    with pytest.raises(OracleError):
        gen_random_unipolar(GeneratorConfig(seed=0, n=3, k=4))


def test_gnp_extremes():
    assert gen_gnp(GeneratorConfig(seed=1, n=6, p=0.0)).m == 0
    assert gen_gnp(GeneratorConfig(seed=1, n=6, p=1.0)).m == 15


def test_bipartite_and_formula_generators():
    b = gen_random_bipartite(3, 3, 4, 1.0)
    assert b.edge_count == 12
    f = gen_random_formula(XorShift64Star(0), 5, 4)
    assert len(f.clauses) == 4 and all(len(set(c)) == 3 for c in f.clauses)
    with pytest.raises(OracleError):
        gen_random_formula(XorShift64Star(0), 2, 1)


def test_maximal_cliques_brute():
    assert brute_maximal_cliques(gen_named("P3")) == [frozenset({0, 1}), frozenset({1, 2})]
    assert brute_maximal_cliques(Graph(2)) == [frozenset({0}), frozenset({1})]

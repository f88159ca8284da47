"""Seeded cross-checks of the main algorithms against the brute-force oracles.

Each suite returns a plain-text report; reports contain no timings or
addresses, so equal seeds give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import oracle
from .chordal import is_perfect_elimination_order, lex_m, peo, verify_minimal
from .graph import Graph, bipartition, format_edge_list, is_clique, is_independent
from .matching import hopcroft_karp, konig_cover
from .optimize import gs_max_clique, gs_max_independent_set, gs_min_clique_cover, gs_min_coloring
from .perfect_code import (
    embed_assignment,
    exact_perfect_code,
    extract_assignment,
    reduce_one_in_three,
    split_graph_perfect_code,
)
from .recognition import GsResult, Variant, generalized_split_test, unipolar_test, validate_clique_split

SUITES = ("recognition", "triangulation", "matching", "optimize", "perfect-code")


@dataclass
class Report:
    suite: str
    seed: int
    budget: int
    counters: dict[str, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    def bump(self, key: str, by: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + by

    def fail(self, what: str, g: Graph | None = None) -> None:
        lines = [f"MISMATCH {what}"]
        if g is not None:
            lines += ["  " + line for line in format_edge_list(g).splitlines()]
        self.mismatches.append("\n".join(lines))

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def text(self) -> str:
        lines = [f"suite {self.suite} seed {self.seed} budget {self.budget}"]
        lines += [f"{k} {v}" for k, v in sorted(self.counters.items())]
        lines.append(f"mismatches {len(self.mismatches)}")
        lines += self.mismatches
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"


def check_recognition(seed: int, budget: int) -> Report:
    rep = Report("recognition", seed, budget)
    rng = oracle.XorShift64Star(seed)
    for i in range(budget):
        n = rng.randint(1, 10)
        if i % 2:
            g, _ = oracle.gen_random_unipolar(
                oracle.GeneratorConfig(rng.next_u64(), n, k=rng.randint(0, n), q=rng.random())
            )
        else:
            g = oracle.gen_gnp(oracle.GeneratorConfig(rng.next_u64(), n, p=(0.2, 0.5, 0.8)[rng.below(3)]))
        cs = unipolar_test(g)
        truth = oracle.brute_unipolar(g) is not None
        rep.bump("instances")
        rep.bump("unipolar" if truth else "not-unipolar")
        if (cs is not None) != truth:
            rep.fail(f"membership: algorithm {cs is not None}, oracle {truth}", g)
        elif cs is not None and not validate_clique_split(g, cs):
            rep.fail("invalid split", g)
    return rep


def check_triangulation(seed: int, budget: int) -> Report:
    rep = Report("triangulation", seed, budget)
    rng = oracle.XorShift64Star(seed)
    for _ in range(budget):
        n = rng.randint(1, 30)
        p = rng.randint(1, 9) / 10
        g = oracle.gen_gnp(oracle.GeneratorConfig(rng.next_u64(), n, p=p))
        t = lex_m(g)
        rep.bump("instances")
        rep.bump("fill-edges", t.m_fill)
        if peo(t.filled_graph) is None or not is_perfect_elimination_order(t.filled_graph, t.order):
            rep.fail("filled graph not chordal", g)
        elif not verify_minimal(t):
            rep.fail("fill edge is not the unique chord of a 4-cycle", g)
        elif n <= 8 and not oracle.is_inclusion_minimal(t):
            rep.fail("fill not inclusion-minimal", g)
    return rep


def check_matching(seed: int, budget: int) -> Report:
    rep = Report("matching", seed, budget)
    rng = oracle.XorShift64Star(seed)
    for _ in range(budget):
        nl = rng.randint(0, 6)
        nr = rng.randint(0, 6)
        b = oracle.gen_random_bipartite(rng.next_u64(), nl, nr, rng.random())
        m = hopcroft_karp(b)
        rep.bump("instances")
        rep.bump("matched-edges", m.size)
        if m.size != oracle.brute_max_matching(b):
            rep.fail(f"matching size {m.size} on bipartite edges {b.edges()}")
            continue
        try:
            cover = konig_cover(b, m)
        except ValueError as exc:
            rep.fail(f"{exc} on bipartite edges {b.edges()}")
            continue
        if any(u not in cover and w not in cover for u, w in b.edges()):
            rep.fail(f"cover misses an edge on bipartite edges {b.edges()}")
    return rep


def _check_optima(rep: Report, g: Graph, r: GsResult) -> None:
    mis = gs_max_independent_set(g, r)
    clq = gs_max_clique(g, r)
    cover = gs_min_clique_cover(g, r)
    col = gs_min_coloring(g, r)
    if not is_independent(g, mis):
        rep.fail("independent set witness invalid", g)
    if not is_clique(g, clq):
        rep.fail("clique witness invalid", g)
    if not cover.is_valid(g):
        rep.fail("clique cover witness invalid", g)
    if not col.is_proper(g):
        rep.fail("colouring witness invalid", g)
    truth = (oracle.brute_alpha(g), oracle.brute_omega(g), oracle.brute_theta(g), oracle.brute_chi(g))
    got = (len(mis), len(clq), len(cover), col.palette_size)
    if got != truth:
        rep.fail(f"optima (alpha, omega, theta, chi) {got} != oracle {truth}", g)
    if got[0] != got[2] or got[1] != got[3]:
        rep.fail("perfection equalities violated", g)


def check_optimize(seed: int, budget: int) -> Report:
    rep = Report("optimize", seed, budget)
    rng = oracle.XorShift64Star(seed)
    for i in range(budget):
        n = rng.randint(1, 12)
        cfg = oracle.GeneratorConfig(rng.next_u64(), n, k=rng.randint(0, n), q=rng.random())
        if i % 2:
            g, cs = oracle.gen_random_co_unipolar(cfg)
            planted = GsResult(Variant.CO_UNIPOLAR, cs)
        else:
            g, cs = oracle.gen_random_unipolar(cfg)
            planted = GsResult(Variant.UNIPOLAR, cs)
        rep.bump("instances")
        _check_optima(rep, g, planted)
        r = generalized_split_test(g)
        if r.variant is Variant.NEITHER:
            rep.fail("generalized split graph not recognised", g)
        else:
            _check_optima(rep, g, r)
    return rep


def check_perfect_code(seed: int, budget: int) -> Report:
    rep = Report("perfect-code", seed, budget)
    rng = oracle.XorShift64Star(seed)
    for _ in range(budget):
        k = rng.randint(3, 6)
        s = rng.randint(0, 6)
        f = oracle.gen_random_formula(rng, k, s)
        sat = f.brute_satisfiable()
        rep.bump("formulas")
        rep.bump("satisfiable" if sat else "unsatisfiable")
        for variant in ("unipolar", "bipartite"):
            rm = reduce_one_in_three(f, variant)
            d = exact_perfect_code(rm.graph)
            if (d is not None) != sat:
                rep.fail(f"{variant} gadget: code found {d is not None}, satisfiable {sat}", rm.graph)
            if d is not None:
                values = extract_assignment(rm, d)
                if embed_assignment(rm, values) != d or extract_assignment(rm, embed_assignment(rm, values)) != values:
                    rep.fail(f"{variant} gadget: embed/extract round trip broken", rm.graph)
            if variant == "unipolar" and unipolar_test(rm.graph) is None:
                rep.fail("unipolar gadget not recognised", rm.graph)
            if variant == "bipartite" and bipartition(rm.graph) is None:
                rep.fail("bipartite gadget has an odd cycle", rm.graph)
        n = rng.randint(1, 14)
        k_side, i_side, g = _random_split_graph(rng, n)
        rep.bump("split-graphs")
        fast = split_graph_perfect_code(g, k_side, i_side)
        slow = exact_perfect_code(g)
        if (fast is None) != (slow is None):
            rep.fail(f"split graph: fast {fast is not None}, exact {slow is not None}", g)
    return rep


def _random_split_graph(rng: oracle.XorShift64Star, n: int) -> tuple[list[int], list[int], Graph]:
    verts = list(range(n))
    rng.shuffle(verts)
    cut = rng.randint(0, n)
    k_side, i_side = sorted(verts[:cut]), sorted(verts[cut:])
    p = rng.random()
    edges = [(a, b) for i, a in enumerate(k_side) for b in k_side[i + 1 :]]
    edges += [(a, b) for a in k_side for b in i_side if rng.random() < p]
    return k_side, i_side, Graph(n, edges)


_RUNNERS = {
    "recognition": check_recognition,
    "triangulation": check_triangulation,
    "matching": check_matching,
    "optimize": check_optimize,
    "perfect-code": check_perfect_code,
}


def run_check(suite: str, budget: int, seed: int = 0) -> Report:
    try:
        runner = _RUNNERS[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    return runner(seed, budget)


def run_all(budget: int, seed: int = 0) -> list[Report]:
    return [run_check(s, budget, seed) for s in SUITES]

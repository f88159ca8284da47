"""Brute-force reference solvers and seeded instance generators.

Everything random goes through :class:`XorShift64Star`, a fixed 64-bit
generator, so a seed reproduces the same instances on any platform::

    seeding:  s = splitmix64(seed)            (s forced non-zero)
    step:     s ^= s >> 12; s ^= s << 25; s ^= s >> 27   (mod 2**64)
    output:   (s * 0x2545F4914F6CDD1D) mod 2**64

Floats use the top 53 output bits; bounded integers use rejection on the
smallest covering bitmask.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .chordal import Triangulation, is_chordal, with_fill
from .graph import Graph, bits_of, complement, components_mask, is_clique_mask
from .matching import BipartiteGraph
from .perfect_code import Formula
from .recognition import CliqueSplit

_MASK64 = (1 << 64) - 1


class OracleError(ValueError):
    pass


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & _MASK64) or 1

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("bound must be positive")
        mask = (1 << (n - 1).bit_length()) - 1
        while True:
            r = self.next_u64() & mask
            if r < n:
                return r

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: range | list, k: int) -> list:
        pool = list(population)
        self.shuffle(pool)
        return pool[:k]

    def fork(self) -> "XorShift64Star":
        return XorShift64Star(self.next_u64())


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n: int
    p: float = 0.5
    k: int = 0
    q: float = 0.5


# --- brute-force oracles -------------------------------------------------------


def _refuse(g: Graph, bound: int, what: str) -> None:
    if g.n > bound:
        raise OracleError(f"{what} refused: {g.n} vertices exceeds the bound of {bound}")


def brute_unipolar(g: Graph) -> CliqueSplit | None:
    """First clique center (by size, then lexicographic) whose removal leaves cliques."""
    _refuse(g, 16, "brute_unipolar")
    full = g.all_mask
    for size in range(g.n + 1):
        for h in itertools.combinations(range(g.n), size):
            hm = sum(1 << v for v in h)
            if not is_clique_mask(g, hm):
                continue
            comps = components_mask(g, full & ~hm)
            if all(is_clique_mask(g, c) for c in comps):
                return CliqueSplit.of(h, [bits_of(c) for c in comps])
    return None


def _max_clique_size(g: Graph) -> int:
    bits = g.bits
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & bits[v])

    expand(0, g.all_mask)
    return best


def brute_omega(g: Graph) -> int:
    _refuse(g, 20, "brute_omega")
    return _max_clique_size(g)


def brute_alpha(g: Graph) -> int:
    _refuse(g, 20, "brute_alpha")
    return _max_clique_size(complement(g))


def _colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [0] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned = {color[w] for w in g.adj(v)}
        for c in range(1, min(used + 1, k) + 1):
            if c not in banned:
                color[v] = c
                if place(i + 1, max(used, c)):
                    return True
        color[v] = 0
        return False

    return place(0, 0)


def brute_chi(g: Graph) -> int:
    _refuse(g, 14, "brute_chi")
    k = _max_clique_size(g)
    while not _colorable(g, k):
        k += 1
    return k


def brute_theta(g: Graph) -> int:
    _refuse(g, 14, "brute_theta")
    return brute_chi(complement(g))


def brute_perfect_codes(g: Graph) -> list[frozenset[int]]:
    _refuse(g, 16, "brute_perfect_codes")
    closed = [g.adj_bits(v) | (1 << v) for v in range(g.n)]
    out = []
    for code in range(1 << g.n):
        cover = 0
        ok = True
        for v in bits_of(code):
            if cover & closed[v]:
                ok = False
                break
            cover |= closed[v]
        if ok and cover == g.all_mask:
            out.append(frozenset(bits_of(code)))
    return sorted(out, key=sorted)


def brute_max_matching(b: BipartiteGraph) -> int:
    """Maximum matching size by exhaustive branching on the left side."""
    left = list(b.left)

    def best(i: int, used: frozenset[int]) -> int:
        if i == len(left):
            return 0
        top = best(i + 1, used)
        for w in b.adj[left[i]]:
            if w not in used:
                top = max(top, 1 + best(i + 1, used | {w}))
        return top

    return best(0, frozenset())


def brute_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    _refuse(g, 16, "brute_maximal_cliques")
    cliques = [c for c in range(1 << g.n) if is_clique_mask(g, c)]
    cset = set(cliques)
    out = []
    for c in cliques:
        if c and not any((c | (1 << v)) in cset for v in range(g.n) if not (c >> v) & 1):
            out.append(frozenset(bits_of(c)))
    return sorted(out, key=sorted)


def is_inclusion_minimal(t: Triangulation) -> bool:
    """No single fill edge can be dropped while keeping the graph chordal."""
    for f in t.fill:
        if is_chordal(with_fill(t.base, t.fill - {f}).filled_graph):
            return False
    return True


# --- generators ----------------------------------------------------------------


def gen_random_unipolar(cfg: GeneratorConfig) -> tuple[Graph, CliqueSplit]:
    """Planted clique split with ``cfg.k`` peripherals and cross-edge probability ``cfg.q``."""
    n, k = cfg.n, cfg.k
    if k < 0 or k > n:
        raise OracleError(f"need 0 <= k <= n, got k={k}, n={n}")
    rng = XorShift64Star(cfg.seed)
    verts = list(range(n))
    rng.shuffle(verts)
    c = n if k == 0 else rng.randint(0, n - k)
    center, rest = verts[:c], verts[c:]
    cuts = sorted(rng.sample(range(1, len(rest)), k - 1)) if k > 1 else []
    peripherals = [rest[a:b] for a, b in zip([0, *cuts], [*cuts, len(rest)])] if k else []
    edges = []
    for part in (center, *peripherals):
        edges.extend(itertools.combinations(part, 2))
    for part in peripherals:
        for a in center:
            for b in part:
                if rng.random() < cfg.q:
                    edges.append((a, b))
    return Graph(n, edges), CliqueSplit.of(center, peripherals)


def gen_random_co_unipolar(cfg: GeneratorConfig) -> tuple[Graph, CliqueSplit]:
    """Complement of a planted unipolar graph; the split describes the complement."""
    g, cs = gen_random_unipolar(cfg)
    return complement(g), cs


def gen_gnp(cfg: GeneratorConfig) -> Graph:
    rng = XorShift64Star(cfg.seed)
    return Graph(cfg.n, [e for e in itertools.combinations(range(cfg.n), 2) if rng.random() < cfg.p])


def gen_random_bipartite(seed: int, n_left: int, n_right: int, p: float) -> BipartiteGraph:
    rng = XorShift64Star(seed)
    left = range(n_left)
    right = range(n_left, n_left + n_right)
    adj = {u: [w for w in right if rng.random() < p] for u in left}
    return BipartiteGraph(left, right, adj)


def gen_all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices; edge set ``i`` follows the bits of ``i``."""
    if n > 6:
        raise OracleError("exhaustive enumeration is capped at n = 6")
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if (code >> i) & 1])


def _path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise OracleError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def _disjoint_cliques(r: int, n: int) -> Graph:
    return Graph(r * n, [e for b in range(r) for e in itertools.combinations(range(b * n, b * n + n), 2)])


def _g_c() -> Graph:
    # triangle 0,1,2; path 3-4-5-6-7; joined by 0-3
    return Graph(8, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (0, 3)])


NAMED_PATTERNS = ("P<n>", "C<n>", "K<n>", "<r>K<n>", "prism", "G_c", "co-<name>")


def gen_named(name: str) -> Graph:
    """Named instance; ``co-`` prefixes take the complement.

    ``prism`` is the complement of ``C6``: triangles 0-2-4 and 1-3-5 plus the
    matching 0-3, 1-4, 2-5.
    """
    if name.startswith("co-"):
        return complement(gen_named(name[3:]))
    if name == "prism":
        return complement(_cycle(6))
    if name == "G_c":
        return _g_c()
    m = re.fullmatch(r"(\d*)([PCK])(\d+)", name)
    if m:
        reps, kind, size = m.group(1), m.group(2), int(m.group(3))
        if reps:
            if kind != "K":
                raise OracleError(f"only disjoint cliques take a multiplier: {name!r}")
            return _disjoint_cliques(int(reps), size)
        return {"P": _path, "C": _cycle, "K": _complete}[kind](size)
    raise OracleError(f"unknown graph name {name!r}; known patterns: {', '.join(NAMED_PATTERNS)}")


def gen_random_formula(rng: XorShift64Star, var_count: int, clause_count: int) -> Formula:
    if var_count < 3 and clause_count:
        raise OracleError("clauses need at least three variables")
    clauses = [tuple(sorted(rng.sample(range(var_count), 3))) for _ in range(clause_count)]
    return Formula.of(var_count, clauses)

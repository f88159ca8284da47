"""Perfect codes (efficient dominating sets) and the One-in-Three 3SAT gadget.

A perfect code ``D`` is an independent set whose closed neighbourhoods
partition the vertex set. :func:`reduce_one_in_three` builds the gadget
graph in which perfect codes correspond to one-in-three satisfying
assignments of a monotone 3-CNF formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits_of, is_clique, is_independent, mask_of
from .recognition import CliqueSplit

DEFAULT_MAX_VERTICES = 24


class PerfectCodeError(ValueError):
    pass


def is_perfect_code(g: Graph, d: Iterable[int]) -> bool:
    d_mask = mask_of(d)
    if d_mask >> g.n:
        raise GraphError("code contains a vertex outside the graph")
    for v in range(g.n):
        hits = (g.adj_bits(v) & d_mask).bit_count()
        if (d_mask >> v) & 1:
            if hits:
                return False
        elif hits != 1:
            return False
    return True


def exact_perfect_code(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> frozenset[int] | None:
    """Some perfect code of ``g`` by exhaustive search, or ``None``.

    Closed neighbourhoods of the code must tile ``V`` exactly, so the search
    repeatedly takes the first uncovered vertex (in ascending degree, then
    index) and branches over the members of its closed neighbourhood whose
    own closed neighbourhood avoids everything covered so far.
    """
    if g.n > max_vertices:
        raise PerfectCodeError(f"exact search refused: {g.n} vertices exceeds the bound of {max_vertices}")
    closed = [g.adj_bits(v) | (1 << v) for v in range(g.n)]
    scan = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    full = g.all_mask
    chosen: list[int] = []

    def search(covered: int) -> bool:
        if covered == full:
            return True
        v = next(u for u in scan if not (covered >> u) & 1)
        for u in bits_of(closed[v]):
            if closed[u] & covered == 0:
                chosen.append(u)
                if search(covered | closed[u]):
                    return True
                chosen.pop()
        return False

    if search(0):
        code = frozenset(chosen)
        assert is_perfect_code(g, code)
        return code
    return None


def split_graph_perfect_code(
    g: Graph, k_side: Iterable[int], i_side: Iterable[int]
) -> frozenset[int] | None:
    """Perfect code of a split graph with clique ``k_side`` and independent ``i_side``.

    A code holds at most one clique vertex. With clique vertex ``x`` it must
    be ``{x}`` plus the isolated vertices, and every non-isolated vertex of
    the independent side must be adjacent to ``x``. Without one, every vertex
    of the independent side is in the code and their neighbourhoods must
    partition the clique side.
    """
    k = frozenset(k_side)
    i = frozenset(i_side)
    if k & i or (k | i) != frozenset(range(g.n)):
        raise PerfectCodeError("clique and independent sides must partition the vertices")
    if not is_clique(g, k):
        raise PerfectCodeError("clique side is not a clique")
    if not is_independent(g, i):
        raise PerfectCodeError("independent side is not independent")
    isolated = frozenset(v for v in i if not g.adj(v))
    attached = i - isolated
    for x in sorted(k):
        if attached <= g.adj(x):
            code = isolated | {x}
            if is_perfect_code(g, code):
                return code
    if is_perfect_code(g, i):
        return i
    return None


# --- One-in-Three 3SAT reduction ---------------------------------------------


@dataclass(frozen=True)
class Formula:
    """Monotone 3-CNF: each clause is three distinct variable indices."""

    var_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.var_count < 0:
            raise PerfectCodeError("variable count must be non-negative")
        for c in self.clauses:
            if len(c) != 3 or len(set(c)) != 3:
                raise PerfectCodeError(f"clause {c} must name three distinct variables")
            if any(not 0 <= x < self.var_count for x in c):
                raise PerfectCodeError(f"clause {c} names a variable outside 0..{self.var_count - 1}")

    @classmethod
    def of(cls, var_count: int, clauses: Iterable[Iterable[int]]) -> "Formula":
        return cls(var_count, tuple(tuple(c) for c in clauses))

    def one_in_three(self, values: Sequence[bool]) -> bool:
        return all(sum(bool(values[x]) for x in c) == 1 for c in self.clauses)

    def brute_satisfiable(self) -> bool:
        return any(self.one_in_three(v) for v in itertools.product((False, True), repeat=self.var_count))


def format_formula(f: Formula) -> str:
    lines = [f"{f.var_count} {len(f.clauses)}"]
    lines.extend(" ".join(map(str, c)) for c in f.clauses)
    return "\n".join(lines) + "\n"


def parse_formula(text: str) -> Formula:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not rows:
        raise PerfectCodeError("missing header line 'k s'")
    try:
        head = [int(x) for x in rows[0]]
        body = [[int(x) for x in r] for r in rows[1:]]
    except ValueError:
        raise PerfectCodeError("formula entries must be integers") from None
    if len(head) != 2:
        raise PerfectCodeError("header must be 'k s'")
    k, s = head
    if len(body) != s:
        raise PerfectCodeError(f"header declares {s} clauses, found {len(body)}")
    return Formula.of(k, body)


@dataclass(frozen=True)
class ReductionMap:
    """Gadget graph plus the vertex behind every clause, variable and pendant.

    Vertices are numbered clauses first, then variables, then pendants.
    ``split`` is the clique split of the unipolar variant (``None`` for the
    bipartite variant).
    """

    formula: Formula
    graph: Graph
    split: CliqueSplit | None
    clause_vertices: tuple[int, ...]
    var_vertices: tuple[int, ...]
    pendant_vertices: tuple[int, ...]
    variant: str

    def map_comments(self) -> list[str]:
        lines = ["map:"]
        lines += [f"clause {i} -> {v}" for i, v in enumerate(self.clause_vertices)]
        lines += [f"var {i} -> {v}" for i, v in enumerate(self.var_vertices)]
        lines += [f"pendant {i} -> {v}" for i, v in enumerate(self.pendant_vertices)]
        return lines


def reduce_one_in_three(f: Formula, variant: str = "unipolar") -> ReductionMap:
    if variant not in ("unipolar", "bipartite"):
        raise PerfectCodeError(f"unknown variant {variant!r}")
    s, k = len(f.clauses), f.var_count
    clause_v = tuple(range(s))
    var_v = tuple(range(s, s + k))
    pend_v = tuple(range(s + k, s + 2 * k))
    edges = [(var_v[i], pend_v[i]) for i in range(k)]
    for q, clause in zip(clause_v, f.clauses):
        edges.extend((q, var_v[x]) for x in clause)
    split = None
    if variant == "unipolar":
        edges.extend(itertools.combinations(clause_v, 2))
        split = CliqueSplit.of(clause_v, [(var_v[i], pend_v[i]) for i in range(k)])
    g = Graph(s + 2 * k, edges)
    return ReductionMap(f, g, split, clause_v, var_v, pend_v, variant)


def extract_assignment(rm: ReductionMap, d: Iterable[int]) -> tuple[bool, ...]:
    d = frozenset(d)
    if not is_perfect_code(rm.graph, d):
        raise PerfectCodeError("not a perfect code of the reduction graph")
    values = tuple(v in d for v in rm.var_vertices)
    if not rm.formula.one_in_three(values):
        raise PerfectCodeError("perfect code does not decode to a one-in-three assignment")
    return values


def embed_assignment(rm: ReductionMap, values: Sequence[bool]) -> frozenset[int]:
    if len(values) != rm.formula.var_count:
        raise PerfectCodeError("assignment length differs from the variable count")
    if not rm.formula.one_in_three(values):
        raise PerfectCodeError("assignment does not set exactly one variable per clause")
    d = frozenset(
        rm.var_vertices[i] if values[i] else rm.pendant_vertices[i] for i in range(len(values))
    )
    if not is_perfect_code(rm.graph, d):
        raise PerfectCodeError("embedded set is not a perfect code")
    return d

"""Exact optimisation on unipolar and generalized split graphs.

All four problems are solved from a clique split ``H; H_1..H_k``. Maximum
clique and minimum colouring reduce to one bipartite matching per
peripheral, in the complement of ``G`` restricted to ``H | H_i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement, is_clique
from .matching import BipartiteGraph, Matching, hopcroft_karp, max_independent_set_bipartite
from .recognition import CliqueSplit, GsResult, Variant, validate_clique_split


class OptimizeError(ValueError):
    """Raised on an invalid split or an unusable recognition result."""


@dataclass(frozen=True)
class Coloring:
    """``color[v]`` is the colour of vertex ``v``; colours are ``1..palette_size``."""

    color: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return max(self.color, default=0)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.palette_size)]
        for v, c in enumerate(self.color):
            out[c - 1].append(v)
        return out

    def is_proper(self, g: Graph) -> bool:
        if len(self.color) != g.n or any(c < 1 for c in self.color):
            return False
        if set(self.color) != set(range(1, self.palette_size + 1)):
            return False
        return all(self.color[u] != self.color[v] for u, v in g.edges())


@dataclass(frozen=True)
class CliqueCover:
    parts: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.parts)

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for p in self.parts:
            if not p or seen & p or not is_clique(g, p):
                return False
            seen |= p
        return seen == set(range(g.n))


def _require_split(g: Graph, cs: CliqueSplit) -> None:
    if not validate_clique_split(g, cs):
        raise OptimizeError("not a valid clique split of the graph")


def _missing_everywhere(g: Graph, cs: CliqueSplit) -> int | None:
    """Smallest center vertex with a non-neighbour in every peripheral."""
    for x in sorted(cs.center):
        nb = g.adj(x)
        if all(len(nb & p) < len(p) for p in cs.peripherals):
            return x
    return None


def max_independent_set_unipolar(g: Graph, cs: CliqueSplit) -> frozenset[int]:
    _require_split(g, cs)
    x = _missing_everywhere(g, cs)
    if x is None:
        return frozenset(min(p) for p in cs.peripherals)
    nb = g.adj(x)
    return frozenset([x, *(min(p - nb) for p in cs.peripherals)])


def _subproblems(g: Graph, cs: CliqueSplit) -> list[tuple[BipartiteGraph, Matching]]:
    out = []
    for p in cs.peripherals:
        b = BipartiteGraph.complement_between(g, cs.center, p)
        out.append((b, hopcroft_karp(b)))
    return out


def max_clique_unipolar(g: Graph, cs: CliqueSplit) -> frozenset[int]:
    """Largest clique, found inside the best ``H | H_i``.

    The clique number of ``G[H | H_i]`` is ``|H| + |H_i| - |M_i|`` with
    ``M_i`` a maximum matching of the bipartite complement; only the winning
    subproblem has its independent set extracted.
    """
    _require_split(g, cs)
    if cs.k == 0:
        return cs.center
    subs = _subproblems(g, cs)
    sizes = [len(cs.center) + len(p) - m.size for p, (_, m) in zip(cs.peripherals, subs)]
    best = max(range(cs.k), key=lambda i: (sizes[i], -i))
    b, m = subs[best]
    return max_independent_set_bipartite(b, m)


def min_clique_cover_unipolar(g: Graph, cs: CliqueSplit) -> CliqueCover:
    _require_split(g, cs)
    if _missing_everywhere(g, cs) is not None or cs.k == 0:
        return CliqueCover(tuple(p for p in cs.parts() if p))
    parts = [set(p) for p in cs.peripherals]
    for v in sorted(cs.center):
        nb = g.adj(v)
        for part in parts:
            if part <= nb:
                part.add(v)
                break
        else:
            raise OptimizeError(f"center vertex {v} sees no peripheral clique")
    return CliqueCover(tuple(frozenset(p) for p in parts))


def min_coloring_unipolar(g: Graph, cs: CliqueSplit) -> Coloring:
    """Colouring with exactly ``omega(G)`` colours.

    Center vertices take colours ``1..|H|`` in ascending order. In each
    ``H | H_i`` a peripheral vertex matched (in the complement) to a center
    vertex reuses that vertex's colour; unmatched peripheral vertices take
    ``|H|+1, |H|+2, ...`` in ascending order, which is safe across
    subproblems because distinct peripherals are non-adjacent.
    """
    _require_split(g, cs)
    color = [0] * g.n
    center = sorted(cs.center)
    for c, v in enumerate(center, start=1):
        color[v] = c
    for p, (_, m) in zip(cs.peripherals, _subproblems(g, cs)):
        mate = m.mate_right()
        fresh = len(center) + 1
        for w in sorted(p):
            if w in mate:
                color[w] = color[mate[w]]
            else:
                color[w] = fresh
                fresh += 1
    return Coloring(tuple(color))


# --- generalized split wrappers ----------------------------------------------


def _unpack(r: GsResult) -> tuple[Variant, CliqueSplit]:
    if r.variant is Variant.NEITHER or r.split is None:
        raise OptimizeError("graph is not a generalized split graph")
    return r.variant, r.split


def gs_max_independent_set(g: Graph, r: GsResult) -> frozenset[int]:
    variant, cs = _unpack(r)
    if variant is Variant.UNIPOLAR:
        return max_independent_set_unipolar(g, cs)
    return max_clique_unipolar(complement(g), cs)


def gs_max_clique(g: Graph, r: GsResult) -> frozenset[int]:
    variant, cs = _unpack(r)
    if variant is Variant.CO_UNIPOLAR:
        return max_independent_set_unipolar(complement(g), cs)
    return max_clique_unipolar(g, cs)


def gs_min_clique_cover(g: Graph, r: GsResult) -> CliqueCover:
    variant, cs = _unpack(r)
    if variant is Variant.UNIPOLAR:
        return min_clique_cover_unipolar(g, cs)
    classes = min_coloring_unipolar(complement(g), cs).classes()
    return CliqueCover(tuple(frozenset(c) for c in classes))


def gs_min_coloring(g: Graph, r: GsResult) -> Coloring:
    variant, cs = _unpack(r)
    if variant is Variant.UNIPOLAR:
        return min_coloring_unipolar(g, cs)
    cover = min_clique_cover_unipolar(complement(g), cs)
    color = [0] * g.n
    for c, part in enumerate(sorted(cover.parts, key=min), start=1):
        for v in part:
            color[v] = c
    return Coloring(tuple(color))


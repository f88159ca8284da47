"""Minimal triangulation by LEX-M, elimination orderings and chordal cliques."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits_of, is_clique_mask


@dataclass(frozen=True)
class Triangulation:
    """A graph together with a fill set that makes it chordal.

    ``order`` is the elimination order found alongside the fill (first
    eliminated first); it is a perfect elimination ordering of
    ``filled_graph``. It is empty when the triangulation was assembled
    from an explicit fill set.
    """

    base: Graph
    fill: frozenset[tuple[int, int]]
    filled_graph: Graph
    order: tuple[int, ...] = ()

    @property
    def m_fill(self) -> int:
        return len(self.fill)

    @property
    def m_prime(self) -> int:
        return self.filled_graph.m

    def sorted_fill(self) -> list[tuple[int, int]]:
        return sorted(self.fill)


def with_fill(g: Graph, fill: Iterable[tuple[int, int]]) -> Triangulation:
    """Triangulation record for an explicit fill set (not checked for chordality)."""
    norm = frozenset((min(u, v), max(u, v)) for u, v in fill)
    for u, v in norm:
        if g.has_edge(u, v):
            raise GraphError(f"fill edge ({u}, {v}) is already an edge")
    return Triangulation(g, norm, Graph(g.n, list(g.edges()) + sorted(norm)))


def lex_m(g: Graph) -> Triangulation:
    """Minimal triangulation of ``g`` by the LEX-M search.

    Vertices are numbered from ``n-1`` down to ``0``; at each step the
    unnumbered vertex with the lexicographically largest label is chosen,
    ties going to the highest index. Every unnumbered ``z`` reachable from
    the chosen vertex ``v`` along a path whose interior labels are all
    smaller than ``z``'s label gets a label update, and a fill edge
    ``v-z`` when it is not already a neighbour.

    Labels are kept as even integers ``2 * rank`` between steps; a label
    update adds one, and ranks are recomputed after every step.
    """
    n = g.n
    bits = g.bits
    label = [0] * n
    order = [0] * n
    unnumbered = g.all_mask
    fill: set[tuple[int, int]] = set()
    for i in range(n - 1, -1, -1):
        v = max(bits_of(unnumbered), key=lambda u: (label[u], u))
        order[i] = v
        unnumbered &= ~(1 << v)
        if not unnumbered:
            break
        top = max(label[u] for u in bits_of(unnumbered))
        buckets: list[list[int]] = [[] for _ in range(top // 2 + 1)]
        reached = (1 << v) | (bits[v] & unnumbered)
        for w in bits_of(bits[v] & unnumbered):
            buckets[label[w] // 2].append(w)
            label[w] += 1
        for j in range(len(buckets)):
            bucket = buckets[j]
            lj = 2 * j
            while bucket:
                w = bucket.pop()
                fresh = bits[w] & unnumbered & ~reached
                reached |= fresh
                for z in bits_of(fresh):
                    if label[z] > lj:
                        buckets[label[z] // 2].append(z)
                        label[z] += 1
                        fill.add((min(v, z), max(v, z)))
                    else:
                        bucket.append(z)
        ranks = {val: 2 * r for r, val in enumerate(sorted({label[u] for u in bits_of(unnumbered)}))}
        for u in bits_of(unnumbered):
            label[u] = ranks[label[u]]
    filled = Graph(n, list(g.edges()) + sorted(fill))
    return Triangulation(g, frozenset(fill), filled, tuple(order))


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """Check that every vertex's later neighbours form a clique.

    Uses the parent test: with ``p`` the earliest later neighbour of ``v``,
    the remaining later neighbours of ``v`` must all be adjacent to ``p``.
    """
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = 0
    bits = g.bits
    for v in reversed(order):
        succ = bits[v] & later
        if succ:
            p = min(bits_of(succ), key=pos.__getitem__)
            if succ & ~bits[p] & ~(1 << p):
                return False
        later |= 1 << v
    return True


def peo(g: Graph) -> tuple[int, ...] | None:
    """Perfect elimination ordering via maximum-cardinality search.

    Returns ``None`` when ``g`` is not chordal. MCS ties go to the lowest
    vertex index; the ordering is the reverse of the visit order.
    """
    n = g.n
    weight = [0] * n
    visited = [False] * n
    visit = []
    # bucket queue keyed by weight
    buckets: list[set[int]] = [set(range(n))] + [set() for _ in range(n)]
    top = 0
    for _ in range(n):
        while top > 0 and not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].discard(v)
        visited[v] = True
        visit.append(v)
        for w in g.adj(v):
            if not visited[w]:
                buckets[weight[w]].discard(w)
                weight[w] += 1
                buckets[weight[w]].add(w)
                top = max(top, weight[w])
    order = tuple(reversed(visit))
    return order if is_perfect_elimination_order(g, order) else None


def is_chordal(g: Graph) -> bool:
    return peo(g) is not None


def maximal_cliques_chordal(g: Graph, order: Sequence[int]) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph from a perfect elimination order.

    Each candidate is a vertex together with its later neighbours. The
    candidate of ``v`` is dropped when some ``u`` with parent ``v`` (its
    earliest later neighbour) has exactly one more later neighbour than
    ``v``. Output is sorted by the ascending member tuples.

    Raises
    ------
    GraphError
        If ``order`` is not a perfect elimination ordering of ``g``.
    """
    if not is_perfect_elimination_order(g, order):
        raise GraphError("order is not a perfect elimination ordering")
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    bits = g.bits
    later_mask = [0] * n
    later = 0
    for v in reversed(order):
        later_mask[v] = bits[v] & later
        later |= 1 << v
    size = [m.bit_count() for m in later_mask]
    dominated = [False] * n
    for u in order:
        if later_mask[u]:
            p = min(bits_of(later_mask[u]), key=pos.__getitem__)
            if size[u] == size[p] + 1:
                dominated[p] = True
    cliques = [
        frozenset(bits_of(later_mask[v] | (1 << v))) for v in order if not dominated[v]
    ]
    return sorted(cliques, key=sorted)


def verify_minimal(t: Triangulation) -> bool:
    """Every fill edge must be the unique chord of some 4-cycle in the filled graph.

    For a fill edge ``u-v`` this holds exactly when the common neighbours of
    ``u`` and ``v`` in the filled graph are not all pairwise adjacent.
    """
    gp = t.filled_graph
    for u, v in t.fill:
        common = gp.adj_bits(u) & gp.adj_bits(v)
        if is_clique_mask(gp, common):
            return False
    return True

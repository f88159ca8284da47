"""Maximum bipartite matching (Hopcroft-Karp) and König covers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import Graph

_INF = float("inf")


class BipartiteGraph:
    """Bipartite graph with explicit sides.

    ``adj`` maps each left vertex to its right neighbours; vertex labels are
    arbitrary ints but the two sides must be disjoint.
    """

    def __init__(self, left: Iterable[int], right: Iterable[int], adj: Mapping[int, Iterable[int]]):
        self.left = tuple(sorted(set(left)))
        self.right = tuple(sorted(set(right)))
        right_set = set(self.right)
        if right_set & set(self.left):
            raise ValueError("bipartite sides overlap")
        self.adj: dict[int, tuple[int, ...]] = {}
        for u in self.left:
            nbrs = sorted(set(adj.get(u, ())))
            for w in nbrs:
                if w not in right_set:
                    raise ValueError(f"edge ({u}, {w}) does not cross the bipartition")
            self.adj[u] = tuple(nbrs)

    @classmethod
    def from_host(cls, g: Graph, left: Iterable[int], right: Iterable[int]) -> "BipartiteGraph":
        """Edges of ``g`` between ``left`` and ``right``."""
        right = frozenset(right)
        left = tuple(left)
        return cls(left, right, {u: g.adj(u) & right for u in left})

    @classmethod
    def complement_between(cls, g: Graph, left: Iterable[int], right: Iterable[int]) -> "BipartiteGraph":
        """Non-edges of ``g`` between ``left`` and ``right``."""
        right = frozenset(right)
        left = tuple(left)
        return cls(left, right, {u: right - g.adj(u) for u in left})

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.adj.values())

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in self.left for w in self.adj[u]]


@dataclass(frozen=True)
class Matching:
    """Matched ``(left, right)`` pairs."""

    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def mate_left(self) -> dict[int, int]:
        return dict(self.pairs)

    def mate_right(self) -> dict[int, int]:
        return {r: l for l, r in self.pairs}


def hopcroft_karp(b: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching.

    Phases alternate a BFS layering from the free left vertices with
    DFS augmentation along shortest augmenting paths; vertices and
    neighbours are scanned in ascending order.
    """
    mate_l: dict[int, int | None] = {u: None for u in b.left}
    mate_r: dict[int, int | None] = {w: None for w in b.right}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in b.left:
            if mate_l[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for w in b.adj[u]:
                nxt = mate_r[w]
                if nxt is None:
                    found = True
                elif dist[nxt] == _INF:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return found

    def augment(root: int) -> bool:
        # iterative DFS over the layered graph; stack holds (left vertex, next edge index)
        stack = [[root, 0]]
        path: list[int] = []
        while stack:
            top = stack[-1]
            u, i = top
            nbrs = b.adj[u]
            if i == len(nbrs):
                dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
                continue
            top[1] += 1
            w = nbrs[i]
            nxt = mate_r[w]
            if nxt is None:
                path.append(w)
                for (lu, _), rw in zip(stack, path):
                    mate_l[lu] = rw
                    mate_r[rw] = lu
                return True
            if dist[nxt] == dist[u] + 1:
                path.append(w)
                stack.append([nxt, 0])
        return False

    while bfs():
        for u in b.left:
            if mate_l[u] is None:
                augment(u)
    return Matching(frozenset((u, w) for u, w in mate_l.items() if w is not None))


def konig_cover(b: BipartiteGraph, m: Matching) -> frozenset[int]:
    """Minimum vertex cover from a maximum matching.

    With ``Z`` the vertices reachable from free left vertices by alternating
    paths, the cover is ``(left - Z) | (right & Z)``.

    Raises
    ------
    ValueError
        If the resulting cover is not of size ``|M|`` (``m`` not maximum).
    """
    mate_l = m.mate_left()
    mate_r = m.mate_right()
    reach_l = {u for u in b.left if u not in mate_l}
    reach_r: set[int] = set()
    queue = deque(sorted(reach_l))
    while queue:
        u = queue.popleft()
        for w in b.adj[u]:
            if w in reach_r:
                continue
            reach_r.add(w)
            nxt = mate_r.get(w)
            if nxt is not None and nxt not in reach_l:
                reach_l.add(nxt)
                queue.append(nxt)
    cover = frozenset(u for u in b.left if u not in reach_l) | frozenset(reach_r)
    if len(cover) != m.size:
        raise ValueError(f"cover of size {len(cover)} from matching of size {m.size}; matching not maximum")
    return cover


def max_independent_set_bipartite(b: BipartiteGraph, m: Matching | None = None) -> frozenset[int]:
    if m is None:
        m = hopcroft_karp(b)
    cover = konig_cover(b, m)
    return frozenset(b.left + b.right) - cover

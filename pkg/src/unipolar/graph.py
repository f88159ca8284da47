"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored twice: as frozensets for readable queries and as Python
``int`` bitmasks for the inner loops of the recognition and oracle code.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised on malformed graph construction or edge-list input."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices; vertices are ``0..n-1``.
    edges : iterable of (int, int)
        Vertex pairs. Duplicates (in either orientation) are merged.

    Raises
    ------
    GraphError
        On a self-loop or an endpoint outside ``0..n-1``.
    """

    __slots__ = ("n", "m", "_adj", "_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a self-loop")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._bits = tuple(mask_of(a) for a in adj)
        self.m = sum(len(a) for a in adj) // 2

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Graph":
        """Build from symmetric adjacency bitmasks (no validation beyond loops)."""
        g = cls.__new__(cls)
        g.n = len(bits)
        g._bits = tuple(bits)
        g._adj = tuple(frozenset(bits_of(b)) for b in bits)
        g.m = sum(len(a) for a in g._adj) // 2
        return g

    def adj(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def adj_bits(self, v: int) -> int:
        return self._bits[v]

    @property
    def bits(self) -> tuple[int, ...]:
        return self._bits

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._bits[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.n, self._bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph.from_bits([full & ~b & ~(1 << v) for v, b in enumerate(g.bits)])


def _check_members(g: Graph, s: Iterable[int]) -> list[int]:
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return members


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``.

    Returns the new graph and ``index_map`` where ``index_map[i]`` is the
    original vertex behind new vertex ``i``. New indices follow ascending
    original order.
    """
    members = _check_members(g, s)
    pos = {v: i for i, v in enumerate(members)}
    bits = []
    for v in members:
        b = 0
        for w in g.adj(v):
            j = pos.get(w)
            if j is not None:
                b |= 1 << j
        bits.append(b)
    return Graph.from_bits(bits), members


def components_mask(g: Graph, within: int) -> list[int]:
    """Connected components of the subgraph induced by bitmask ``within``.

    Components come out ordered by their smallest vertex.
    """
    out = []
    rest = within
    bits = g.bits
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= bits[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits_of(c)) for c in components_mask(g, g.all_mask)]


def is_clique_mask(g: Graph, s: int) -> bool:
    bits = g.bits
    for v in bits_of(s):
        if (s & ~bits[v]) != (1 << v):
            return False
    return True


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    return is_clique_mask(g, mask_of(_check_members(g, s)))


def is_independent_mask(g: Graph, s: int) -> bool:
    bits = g.bits
    return all(bits[v] & s == 0 for v in bits_of(s))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    return is_independent_mask(g, mask_of(_check_members(g, s)))


def sees(g: Graph, v: int, s: Iterable[int]) -> bool:
    """True iff ``v`` is adjacent to every member of ``s`` (vacuous for empty ``s``)."""
    s_mask = mask_of(_check_members(g, s))
    return s_mask & ~g.adj_bits(v) == 0


def bipartition(
    g: Graph, *, witness: bool = False
) -> tuple[frozenset[int], frozenset[int]] | None | list[int]:
    """Proper 2-colouring by BFS, or ``None`` when ``g`` has an odd cycle.

    Roots are taken in ascending order; each root goes on the first side,
    so vertex 0 (and every isolated vertex) lands on the first side.

    With ``witness=True`` a non-bipartite graph yields an odd cycle as a
    vertex list instead of ``None``.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj(u)):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return _odd_cycle(parent, u, w) if witness else None
    first = frozenset(v for v in range(g.n) if side[v] == 0)
    second = frozenset(v for v in range(g.n) if side[v] == 1)
    return first, second


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    on_u = set(path_u)
    lca = next(x for x in path_w if x in on_u)
    left = path_u[: path_u.index(lca) + 1]
    right = path_w[: path_w.index(lca)]
    return left + right[::-1]


# --- edge-list text format ---------------------------------------------------


def format_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialise ``g``: header ``n m``, optional ``#`` lines, sorted edges."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"# {c}" if c else "#" for c in comments)
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format written by :func:`format_edge_list`."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#") or not line.strip():
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("missing header line 'n m'")
    lineno, head = rows[0]
    n, m = _ints(head, lineno, "header")
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative header values")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for lineno, parts in body:
        u, v = _ints(parts, lineno, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def _ints(parts: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(parts) != 2:
        raise GraphError(f"line {lineno}: {what} needs two integers")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"line {lineno}: {what} needs two integers") from None


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g, comments))

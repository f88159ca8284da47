"""Recognition of unipolar and generalized split graphs.

A clique split of ``G`` is a partition of the vertices into a center clique
and peripheral cliques with no edge between two different peripherals.
:func:`unipolar_test` finds one (or proves none exists) from a minimal
triangulation ``G'`` of ``G``: some maximal clique of ``G'`` must be the
center of a split of ``G'`` whose fill edges can be repaired by moving a
set of center vertices into one peripheral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import twosat
from .chordal import Triangulation, lex_m, maximal_cliques_chordal, peo
from .graph import (
    Graph,
    bipartition,
    bits_of,
    complement,
    components_mask,
    induced_subgraph,
    is_clique_mask,
    mask_of,
)

TwoSatHook = Callable[[twosat.TwoSatInstance, Sequence[int]], None]


class RecognitionError(RuntimeError):
    """Internal-consistency failure; signals a bug rather than bad input."""


@dataclass(frozen=True)
class CliqueSplit:
    """Center clique plus peripheral cliques.

    Peripherals are stored sorted by their smallest vertex; construct with
    :meth:`of` to get that normalisation.
    """

    center: frozenset[int]
    peripherals: tuple[frozenset[int], ...] = ()

    @classmethod
    def of(cls, center: Iterable[int], peripherals: Iterable[Iterable[int]] = ()) -> "CliqueSplit":
        parts = [frozenset(p) for p in peripherals]
        return cls(frozenset(center), tuple(sorted(parts, key=lambda p: min(p) if p else -1)))

    @property
    def k(self) -> int:
        return len(self.peripherals)

    def parts(self) -> list[frozenset[int]]:
        return [self.center, *self.peripherals]

    def relabel(self, index_map: Sequence[int]) -> "CliqueSplit":
        return CliqueSplit.of(
            (index_map[v] for v in self.center),
            ([index_map[v] for v in p] for p in self.peripherals),
        )

    def format(self) -> list[str]:
        lines = ["center: " + " ".join(map(str, sorted(self.center)))]
        for i, p in enumerate(self.peripherals):
            lines.append(f"clique {i}: " + " ".join(map(str, sorted(p))))
        return [line.rstrip() for line in lines]


class Variant(enum.Enum):
    UNIPOLAR = "UNIPOLAR"
    CO_UNIPOLAR = "CO-UNIPOLAR"
    NEITHER = "NOT-GENERALIZED-SPLIT"


@dataclass(frozen=True)
class GsResult:
    """Outcome of generalized split recognition.

    For ``CO_UNIPOLAR`` the split describes the complement of the input.
    """

    variant: Variant
    split: CliqueSplit | None = None


@dataclass
class TransferSearchState:
    fill_center: list[tuple[int, int]]
    candidates: set[int] = field(default_factory=set)
    rejected_global: set[int] = field(default_factory=set)
    rejected_local: set[int] = field(default_factory=set)
    target_index: int | None = None

    @classmethod
    def start(cls, fill_center: Iterable[tuple[int, int]]) -> "TransferSearchState":
        edges = sorted((min(a, b), max(a, b)) for a, b in fill_center)
        return cls(edges, {v for e in edges for v in e})


def validate_clique_split(g: Graph, cs: CliqueSplit) -> bool:
    parts = cs.parts()
    union = 0
    total = 0
    for p in parts:
        pm = mask_of(p)
        if any(not 0 <= v < g.n for v in p):
            return False
        union |= pm
        total += len(p)
        if not is_clique_mask(g, pm):
            return False
    if union != g.all_mask or total != g.n:
        return False
    if any(not p for p in cs.peripherals):
        return False
    periph_mask = 0
    for p in cs.peripherals:
        pm = mask_of(p)
        reach = 0
        for v in p:
            reach |= g.adj_bits(v)
        if reach & periph_mask:
            return False
        periph_mask |= pm
    return True


def find_transferable_set(
    g: Graph,
    state: TransferSearchState,
    peripherals: Sequence[Iterable[int]],
    *,
    on_twosat: TwoSatHook | None = None,
) -> tuple[frozenset[int], int] | None:
    """Search for center vertices that can move into one peripheral clique.

    Every fill edge inside the center must end up with exactly one endpoint
    moved. Endpoints that do not see exactly one peripheral (while touching
    no other) are excluded first; the remaining choices are settled by a
    2-SAT instance seeded with one endpoint of the smallest fill edge, then
    with the other endpoint if the first attempt fails.

    Returns the moved set and the index of its target peripheral.
    """
    if not state.fill_center:
        raise ValueError("transferable set search needs at least one fill edge")
    periph_masks = [mask_of(p) for p in peripherals]
    if not periph_masks:
        return None
    target_of: dict[int, int] = {}
    state.rejected_global = set()
    for v in sorted(state.candidates):
        nb = g.adj_bits(v)
        seen = [i for i, pm in enumerate(periph_masks) if pm & ~nb == 0]
        touched = [i for i, pm in enumerate(periph_masks) if pm & nb]
        if len(seen) == 1 and touched == seen:
            target_of[v] = seen[0]
        else:
            state.rejected_global.add(v)
    state.candidates -= state.rejected_global
    rej1 = state.rejected_global
    if any(a in rej1 and b in rej1 for a, b in state.fill_center):
        return None

    x, y = state.fill_center[0]
    if x in rej1:
        x, y = y, x
    variables = sorted({v for e in state.fill_center for v in e})
    var_of = {v: i for i, v in enumerate(variables)}

    for seed in (x, y):
        if seed in rej1:
            return None
        target = target_of[seed]
        state.candidates |= state.rejected_local
        state.rejected_local = {u for u in state.candidates if target_of[u] != target}
        state.candidates -= state.rejected_local
        state.target_index = target

        inst = twosat.TwoSatInstance(len(variables))
        s = var_of[seed]
        inst.add(twosat.pos(s), twosat.pos(s))
        for u in sorted(rej1 | state.rejected_local):
            inst.add(twosat.neg(var_of[u]), twosat.neg(var_of[u]))
        for a, b in state.fill_center:
            inst.add(twosat.pos(var_of[a]), twosat.pos(var_of[b]))
            inst.add(twosat.neg(var_of[a]), twosat.neg(var_of[b]))
        if on_twosat is not None:
            on_twosat(inst, variables)
        values = twosat.solve(inst)
        if values is None:
            continue
        moved = frozenset(v for v in variables if values[var_of[v]])
        _check_transfer(g, moved, target, periph_masks)
        return moved, target
    return None


def _check_transfer(g: Graph, moved: frozenset[int], target: int, periph_masks: list[int]) -> None:
    mm = mask_of(moved)
    if not is_clique_mask(g, mm | periph_masks[target]):
        raise RecognitionError("transferred set does not form a clique with its target")
    for i, pm in enumerate(periph_masks):
        if i != target and any(g.adj_bits(v) & pm for v in moved):
            raise RecognitionError("transferred set touches another peripheral clique")


def feasible_center_check(
    g: Graph,
    t: Triangulation,
    h_prime: Iterable[int],
    *,
    on_twosat: TwoSatHook | None = None,
) -> CliqueSplit | None:
    """Try ``h_prime`` (a maximal clique of ``t.filled_graph``) as the center.

    Returns a clique split of ``g`` or ``None`` when this center fails.
    """
    hp = mask_of(h_prime)
    rest = g.all_mask & ~hp
    comps = components_mask(g, rest)
    if not all(is_clique_mask(g, c) for c in comps):
        return None
    fill_center = []
    for a, b in t.fill:
        in_a, in_b = (hp >> a) & 1, (hp >> b) & 1
        if not (in_a or in_b):
            return None
        if in_a and in_b:
            fill_center.append((a, b))
    peripherals = [frozenset(bits_of(c)) for c in comps]
    if not fill_center:
        return CliqueSplit.of(bits_of(hp), peripherals)
    if not peripherals:
        return None
    state = TransferSearchState.start(fill_center)
    found = find_transferable_set(g, state, peripherals, on_twosat=on_twosat)
    if found is None:
        return None
    moved, target = found
    center = frozenset(bits_of(hp)) - moved
    new_periph = [p | moved if i == target else p for i, p in enumerate(peripherals)]
    cs = CliqueSplit.of(center, new_periph)
    if not validate_clique_split(g, cs):
        raise RecognitionError("transfer produced an invalid clique split")
    return cs


def _split_connected(g: Graph, on_twosat: TwoSatHook | None) -> CliqueSplit | None:
    sides = bipartition(complement(g))
    if sides is not None:
        a, b = sides
        return CliqueSplit.of(a, [b] if b else [])
    t = lex_m(g)
    order = peo(t.filled_graph)
    if order is None:
        raise RecognitionError("LEX-M fill did not produce a chordal graph")
    for h_prime in maximal_cliques_chordal(t.filled_graph, order):
        cs = feasible_center_check(g, t, h_prime, on_twosat=on_twosat)
        if cs is not None:
            return cs
    return None


def unipolar_test(g: Graph, *, on_twosat: TwoSatHook | None = None) -> CliqueSplit | None:
    """Clique split of ``g`` or ``None`` when ``g`` is not unipolar.

    ``on_twosat`` is called with every 2-SAT instance built during the
    search and the vertex behind each variable (in the coordinates of the
    component being searched).
    """
    comps = components_mask(g, g.all_mask)
    broken = [c for c in comps if not is_clique_mask(g, c)]
    if not broken:
        if not comps:
            return CliqueSplit(frozenset())
        center = max(comps, key=lambda c: (c.bit_count(), -((c & -c).bit_length())))
        return CliqueSplit.of(bits_of(center), [bits_of(c) for c in comps if c != center])
    if len(broken) > 1:
        return None
    sub, index_map = induced_subgraph(g, bits_of(broken[0]))
    inner = _split_connected(sub, on_twosat)
    if inner is None:
        return None
    inner = inner.relabel(index_map)
    extra = [frozenset(bits_of(c)) for c in comps if c != broken[0]]
    return CliqueSplit.of(inner.center, [*inner.peripherals, *extra])


def is_unipolar(g: Graph) -> bool:
    return unipolar_test(g) is not None


def generalized_split_test(
    g: Graph, *, prefer_complement: bool = False, on_twosat: TwoSatHook | None = None
) -> GsResult:
    """Classify ``g`` as unipolar, co-unipolar or neither.

    The graph itself is tried first unless ``prefer_complement`` is set, in
    which case a split of the complement is preferred when both exist.
    """
    attempts = [(Variant.UNIPOLAR, g), (Variant.CO_UNIPOLAR, complement(g))]
    if prefer_complement:
        attempts.reverse()
    for variant, h in attempts:
        cs = unipolar_test(h, on_twosat=on_twosat)
        if cs is not None:
            return GsResult(variant, cs)
    return GsResult(Variant.NEITHER)

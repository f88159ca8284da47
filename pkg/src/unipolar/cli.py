"""Command-line front end: ``unipolar <subcommand> ...``.

Exit codes: 0 success / in class, 1 valid input outside the class (or a
failed check), 2 malformed input or flags.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import oracle
from .chordal import lex_m, peo, verify_minimal
from .graph import GraphError, complement, format_edge_list, is_clique, is_independent, read_edge_list
from .optimize import gs_max_clique, gs_max_independent_set, gs_min_clique_cover, gs_min_coloring
from .perfect_code import (
    DEFAULT_MAX_VERTICES,
    PerfectCodeError,
    exact_perfect_code,
    is_perfect_code,
    parse_formula,
    reduce_one_in_three,
    split_graph_perfect_code,
)
from .recognition import CliqueSplit, GsResult, Variant, generalized_split_test, validate_clique_split
from .suite import SUITES, run_check

# problems whose linear-time route needs a split of the complement
_PREFER_COMPLEMENT = {"mis": False, "cover": False, "clique": True, "coloring": True}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line diagnostic, exit 2
        raise InputError(message)


def _read_text(path: str) -> str:
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _ints(tokens: Sequence[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"non-integer vertex in {what}") from None


def parse_split(text: str) -> tuple[Variant, CliqueSplit]:
    """Read a split in the ``recognize`` output format.

    A leading ``CO-UNIPOLAR`` line marks a split of the complement; a bare
    ``center:``/``clique i:`` block or a ``UNIPOLAR`` line means the graph itself.
    """
    variant = Variant.UNIPOLAR
    center: list[int] | None = None
    peripherals: list[list[int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("UNIPOLAR", "CO-UNIPOLAR"):
            variant = Variant(line)
        elif line.startswith("center:"):
            center = _ints(line[len("center:"):].split(), "split center")
        elif line.startswith("clique"):
            head, _, rest = line.partition(":")
            if not rest.strip():
                raise InputError(f"empty peripheral clique line: {line!r}")
            peripherals.append(_ints(rest.split(), head))
        else:
            raise InputError(f"unrecognised split line: {line!r}")
    if center is None:
        raise InputError("split file has no 'center:' line")
    return variant, CliqueSplit.of(center, peripherals)


def _emit(out: TextIO, lines: Sequence[str]) -> None:
    for line in lines:
        out.write(line + "\n")


def _vertex_line(vs) -> str:
    return " ".join(map(str, sorted(vs)))


def cmd_recognize(args: argparse.Namespace, out: TextIO) -> int:
    g = read_edge_list(args.graph)
    dumps: list[str] = []

    def hook(inst, variables) -> None:
        dumps.append("c vertices " + " ".join(map(str, variables)) + "\n" + inst.to_dimacs())

    r = generalized_split_test(g, on_twosat=hook if args.dump_2sat else None)
    if args.dump_2sat:
        with open(args.dump_2sat, "w", encoding="ascii", newline="\n") as fh:
            fh.write("".join(dumps))
    _emit(out, [r.variant.value])
    if r.split is None:
        return 1
    target = g if r.variant is Variant.UNIPOLAR else complement(g)
    if not validate_clique_split(target, r.split):
        raise RuntimeError("internal error: produced split failed validation")
    _emit(out, r.split.format())
    return 0


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    g = read_edge_list(args.graph)
    if args.split:
        variant, cs = parse_split(_read_text(args.split))
        r = GsResult(variant, cs)
        target = g if variant is Variant.UNIPOLAR else complement(g)
        if not validate_clique_split(target, cs):
            raise InputError("supplied split is not a clique split of the graph")
    else:
        r = generalized_split_test(g, prefer_complement=_PREFER_COMPLEMENT[args.problem])
        if r.variant is Variant.NEITHER:
            print("not a generalized split graph; refusing to solve", file=sys.stderr)
            return 1
    if args.problem == "mis":
        s = gs_max_independent_set(g, r)
        assert is_independent(g, s)
        _emit(out, [f"mis {len(s)}", _vertex_line(s)])
    elif args.problem == "clique":
        s = gs_max_clique(g, r)
        assert is_clique(g, s)
        _emit(out, [f"clique {len(s)}", _vertex_line(s)])
    elif args.problem == "cover":
        cover = gs_min_clique_cover(g, r)
        assert cover.is_valid(g)
        parts = sorted(cover.parts, key=min)
        _emit(out, [f"cover {len(parts)}", *(f"part {i}: {_vertex_line(p)}" for i, p in enumerate(parts))])
    else:
        col = gs_min_coloring(g, r)
        assert col.is_proper(g)
        lines = [f"coloring {col.palette_size}"]
        lines += [f"color {c}: {_vertex_line(vs)}" for c, vs in enumerate(col.classes(), start=1)]
        _emit(out, lines)
    return 0


def cmd_perfect_code(args: argparse.Namespace, out: TextIO) -> int:
    g = read_edge_list(args.graph)
    if args.split_graph:
        k_side = _ints(
            [t for line in _read_text(args.split_graph).splitlines() if not line.startswith("#") for t in line.split()],
            "clique-side file",
        )
        i_side = sorted(set(range(g.n)) - set(k_side))
        code = split_graph_perfect_code(g, k_side, i_side)
    else:
        code = exact_perfect_code(g, max_vertices=args.max_n)
    if code is None:
        _emit(out, ["perfect-code none"])
        return 1
    assert is_perfect_code(g, code)
    _emit(out, [f"perfect-code {len(code)}", _vertex_line(code)])
    return 0


def cmd_reduce(args: argparse.Namespace, out: TextIO) -> int:
    f = parse_formula(_read_text(args.formula))
    rm = reduce_one_in_three(f, "bipartite" if args.bipartite else "unipolar")
    if rm.split is not None and not validate_clique_split(rm.graph, rm.split):
        raise RuntimeError("internal error: gadget split failed validation")
    out.write(format_edge_list(rm.graph, rm.map_comments()))
    return 0


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    cfg = oracle.GeneratorConfig(args.seed, args.n, p=args.p, k=args.k, q=args.q)
    if args.model == "gnp":
        g = oracle.gen_gnp(cfg)
    elif args.model == "unipolar":
        g, _ = oracle.gen_random_unipolar(cfg)
    elif args.model == "co-unipolar":
        g, _ = oracle.gen_random_co_unipolar(cfg)
    else:
        if not args.name:
            raise InputError("model 'named' needs --name")
        g = oracle.gen_named(args.name)
    out.write(format_edge_list(g))
    return 0


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    if args.triangulate:
        g = read_edge_list(args.triangulate)
        t = lex_m(g)
        ok = peo(t.filled_graph) is not None and verify_minimal(t)
        comments = ["fill:", *(f"{u} {v}" for u, v in t.sorted_fill())]
        out.write(format_edge_list(t.filled_graph, comments))
        return 0 if ok else 1
    suites = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in suites:
        rep = run_check(name, args.budget, args.seed)
        out.write(rep.text())
        ok &= rep.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="unipolar", description="Unipolar and generalized split graph toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="classify a graph and print a clique split")
    r.add_argument("graph")
    r.add_argument("--dump-2sat", metavar="FILE", help="write every 2-SAT instance in DIMACS form")
    r.set_defaults(func=cmd_recognize)

    s = sub.add_parser("solve", help="solve an optimisation problem on a generalized split graph")
    s.add_argument("graph")
    s.add_argument("--problem", required=True, choices=("mis", "clique", "cover", "coloring"))
    s.add_argument("--split", metavar="FILE", help="clique split in 'recognize' output format")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("perfect-code", help="find a perfect code")
    c.add_argument("graph")
    c.add_argument("--split-graph", metavar="K_FILE", help="file listing the clique side of a split graph")
    c.add_argument("--max-n", type=int, default=DEFAULT_MAX_VERTICES, help="vertex bound for exact search")
    c.set_defaults(func=cmd_perfect_code)

    d = sub.add_parser("reduce", help="One-in-Three 3SAT formula to perfect-code gadget graph")
    d.add_argument("formula")
    d.add_argument("--bipartite", action="store_true", help="clause vertices independent instead of a clique")
    d.set_defaults(func=cmd_reduce)

    g = sub.add_parser("gen", help="write a generated graph in edge-list format")
    g.add_argument("model", choices=("gnp", "unipolar", "co-unipolar", "named"))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--q", type=float, default=0.5)
    g.add_argument("--name")
    g.set_defaults(func=cmd_gen)

    k = sub.add_parser("check", help="cross-check algorithms against brute-force oracles")
    k.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    k.add_argument("--budget", type=int, default=100)
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--triangulate", metavar="GRAPH", help="print the LEX-M triangulation of GRAPH instead")
    k.set_defaults(func=cmd_check)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (InputError, GraphError, PerfectCodeError, oracle.OracleError, OSError, UnicodeDecodeError) as exc:
        print(f"unipolar: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

"""Recognition and exact optimisation for unipolar and generalized split graphs."""

from .chordal import Triangulation, lex_m, maximal_cliques_chordal, peo, verify_minimal
from .graph import Graph, GraphError, complement, parse_edge_list, format_edge_list
from .optimize import (
    CliqueCover,
    Coloring,
    gs_max_clique,
    gs_max_independent_set,
    gs_min_clique_cover,
    gs_min_coloring,
    max_clique_unipolar,
    max_independent_set_unipolar,
    min_clique_cover_unipolar,
    min_coloring_unipolar,
)
from .perfect_code import Formula, exact_perfect_code, is_perfect_code, reduce_one_in_three
from .recognition import (
    CliqueSplit,
    GsResult,
    Variant,
    generalized_split_test,
    unipolar_test,
    validate_clique_split,
)

__version__ = "0.1.0"

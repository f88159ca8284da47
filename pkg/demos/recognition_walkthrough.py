"""
Recognising unipolar graphs
===========================

Builds a few small graphs, asks for a clique split, and looks at the
triangulation the search runs on.
"""

# %%
from unipolar import unipolar_test, generalized_split_test, validate_clique_split
from unipolar.oracle import gen_named
from unipolar.chordal import lex_m, maximal_cliques_chordal, peo

# a path on five vertices: the middle edge is a fine center
p5 = gen_named("P5")
split = unipolar_test(p5)
print("\n".join(split.format()))
print("valid:", validate_clique_split(p5, split))

# %%
# Odd holes never split. C6 doesn't either, but its complement does.
for name in ["C5", "C6", "prism", "G_c"]:
    r = generalized_split_test(gen_named(name))
    print(f"{name:6s} {r.variant.value}")

# %%
# The search starts from a minimal triangulation of the graph.
c5 = gen_named("C5")
t = lex_m(c5)
print("fill edges:", t.sorted_fill())
order = peo(t.filled_graph)
print("maximal cliques of the filled graph:", [sorted(c) for c in maximal_cliques_chordal(t.filled_graph, order)])

# %%
# Every 2-SAT instance built along the way can be watched through a hook.
seen = []
unipolar_test(gen_named("prism"), on_twosat=lambda inst, vs: seen.append((len(vs), len(inst.clauses))))
print("2-SAT instances (variables, clauses):", seen)

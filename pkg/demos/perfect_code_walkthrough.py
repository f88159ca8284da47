"""
Perfect codes and the One-in-Three gadget
=========================================
"""

# %%
from unipolar import unipolar_test
from unipolar.graph import bipartition
from unipolar.perfect_code import (
    Formula, reduce_one_in_three, exact_perfect_code, extract_assignment, is_perfect_code,
)

f = Formula.of(5, [(0, 1, 2), (2, 3, 4), (0, 3, 4)])
print("satisfiable (brute force):", f.brute_satisfiable())

# %%
rm = reduce_one_in_three(f)
print(rm.graph)
print("\n".join(rm.map_comments()))
print("gadget is unipolar:", unipolar_test(rm.graph) is not None)

# %%
code = exact_perfect_code(rm.graph)
print("perfect code:", sorted(code), is_perfect_code(rm.graph, code))
print("assignment:", extract_assignment(rm, code))

# %%
# Same formula, clause vertices left independent: the gadget becomes bipartite.
bip = reduce_one_in_three(f, "bipartite")
print("bipartite:", bipartition(bip.graph) is not None)
print("code:", sorted(exact_perfect_code(bip.graph)))

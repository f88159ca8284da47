"""
Exact optimisation on a planted split
=====================================
"""

# %%
from unipolar import GsResult, Variant
from unipolar.oracle import GeneratorConfig, gen_random_unipolar, brute_alpha, brute_omega, brute_chi, brute_theta
from unipolar.optimize import gs_max_independent_set, gs_max_clique, gs_min_clique_cover, gs_min_coloring

g, split = gen_random_unipolar(GeneratorConfig(seed=7, n=12, k=3, q=0.6))
print(g)
print("\n".join(split.format()))

# %%
r = GsResult(Variant.UNIPOLAR, split)
mis = gs_max_independent_set(g, r)
clique = gs_max_clique(g, r)
cover = gs_min_clique_cover(g, r)
coloring = gs_min_coloring(g, r)

print("independent set", sorted(mis))
print("clique         ", sorted(clique))
print("cover          ", [sorted(p) for p in cover.parts])
print("colour classes ", coloring.classes())

# %%
# The brute-force oracles agree, and the graph is perfect so alpha = theta, omega = chi.
print((len(mis), len(clique), len(cover), coloring.palette_size))
print((brute_alpha(g), brute_omega(g), brute_theta(g), brute_chi(g)))

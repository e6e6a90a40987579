"""Watch the extracted prefix settle as PSCTL passes accumulate."""

import numpy as np

import kcds

rng = np.random.default_rng(3)
n = 30
edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
g = kcds.from_edges(edges)
k = 4

forest = kcds.filter_pairs(kcds.build_sct(g), k)
print(f"n={g.n} m={g.m}  {forest.clique_count()} {k}-cliques")

prev = None
for T in (1, 2, 4, 8, 16, 32):
    r = kcds.psctl_run(forest, g.n, T, seed=5)
    rep = kcds.best_prefix_exact(g, kcds.rank_sort(r), k)
    moved = "" if prev == set(rep.nodes) else "  <- changed"
    print(f"T={T:3d}: density {float(rep.density):8.4f} size {rep.size:2d}{moved}")
    prev = set(rep.nodes)

# the stopping rule automates this: run until the prefix survives a window
# of consecutive passes unchanged
r, passes = kcds.psctl_until_converged(forest, g, k, seed=5)
rep = kcds.best_prefix_exact(g, kcds.rank_sort(r), k)
print(f"auto-stop after {passes} passes: density {float(rep.density):.4f}")

# graph is too big for the subset oracle, so sanity-check against a run
# long past any plausible transient
r_long = kcds.psctl_run(forest, g.n, 500, seed=5)
rep_long = kcds.best_prefix_exact(g, kcds.rank_sort(r_long), k)
same = set(rep.nodes) == set(rep_long.nodes)
print(f"T=500 reference finds the same set: {same}")

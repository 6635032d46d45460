"""
Random guesses and the restart driver
=====================================

Compare the two weighted sampling rules on a hub graph whose spokes are
tripled edges, then let the anytime driver find a light cutset.
"""

import numpy as np

from loopcutset import (WeightedMultigraph, degree_probabilities, ratio_probabilities,
                        single_wguess_i, single_wguess_ii, stream, wra)


def hub(eps, m):
    g = WeightedMultigraph({0: 6.0, 1: 3.0 * eps, 2: 3.0 * m})
    g.add_edge(0, 1, 3)
    g.add_edge(0, 2, 3)
    return g


g = hub(1e-3, 1e3)
print("degree rule:", degree_probabilities(g))
print("degree/weight rule:", ratio_probabilities(g))

# how often does each version pick the hub (the optimal single vertex) first?
rng = stream(seed=1, index=0)
n = 20000
one = np.mean([single_wguess_i(g, 1, rng) is not None for _ in range(n)])
two = np.mean([single_wguess_ii(g, 1, rng) is not None for _ in range(n)])
print(f"version I hits the hub {one:.3f} of the time, version II only {two:.4f}")

# the anytime driver keeps the best cutset and records each improvement
rng = np.random.default_rng(5)
big = WeightedMultigraph({v: float(w) for v, w in enumerate(rng.integers(1, 6, size=12))})
for _ in range(24):
    u, v = rng.choice(12, size=2, replace=False)
    big.add_edge(int(u), int(v))
res = wra(big, c=1.0, max_iters=300, seed=5)
print("wra:", sorted(res.cutset), "weight", res.weight, "after", res.iterations_used, "iterations")
# equal-weight guesses also replace the incumbent; show only strict drops
last = None
for it, w, size in res.history:
    if last is None or w < last:
        print(f"  iteration {it}: weight {w} with {size} vertices")
    last = w

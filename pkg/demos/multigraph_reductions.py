"""
Multigraphs and kernel reductions
=================================

Build a small weighted multigraph, then shrink it with the two reductions
used by the randomized solvers.
"""

from loopcutset import (WeightedMultigraph, brute_force_min_wfvs, is_branchy, is_fvs,
                        reduce_to_branchy, reduce_to_rich)

# a triangle 0-1-2 with a doubled edge 2-3, a self-loop on 4 and a pendant path 4-5-6
g = WeightedMultigraph({0: 2.0, 1: 1.0, 2: 3.0, 3: 1.5, 4: 5.0, 5: 1.0, 6: 1.0})
g.add_edge(0, 1)
g.add_edge(1, 2)
g.add_edge(2, 0)
g.add_edge(2, 3, count=2)
g.add_edge(4, 4)
g.add_edge(4, 5)
g.add_edge(5, 6)
print("vertices", g.vertices(), "edges", g.num_edges)
print("degree of 2:", g.degree(2), " degree of 4 (a loop counts twice):", g.degree(4))

# the rich reduction ignores weights: leaves go, degree-2 vertices are bypassed,
# self-loop vertices are forced into the cutset
kernel, forced = reduce_to_rich(g)
print("rich kernel:", list(kernel.edges()), "forced:", sorted(forced))

# the branchy reduction only bypasses a degree-2 vertex when a neighbour is no heavier
kernel, forced = reduce_to_branchy(g)
print("branchy kernel:", list(kernel.edges()), "forced:", sorted(forced), is_branchy(kernel))

# reductions never change the optimum
whole = brute_force_min_wfvs(g)
rest = brute_force_min_wfvs(kernel)
print("optimum", whole.optimum_weight, "=", sum(g.weight(v) for v in forced), "+", rest.optimum_weight)
print("optimal set", sorted(whole.optimum_set), "is an FVS:", is_fvs(g, whole.optimum_set))

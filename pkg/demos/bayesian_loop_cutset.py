"""
Loop cutsets for a Bayesian network
===================================

Conditioning on a loop cutset turns a multiply connected network into a
polytree.  Each variable v becomes two split-graph vertices; only the
out-copy can be chosen, at a cost of log2 of the domain size.
"""

from loopcutset import BayesianDag, loop_cutset, split_graph, validate_loop_cutset
from loopcutset.bayes import psi

# the classic "asia"-shaped skeleton with made-up domain sizes
domains = {0: 2, 1: 3, 2: 2, 3: 4, 4: 2, 5: 2}
edges = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (2, 5), (4, 5)]
d = BayesianDag(domains, edges)

s = split_graph(d)
print("split graph:", len(s.graph), "vertices,", s.graph.num_edges, "edges")
print("out-copy of 3 has weight", s.graph.weight(7), "and maps back to", psi(s, {7}))

res = loop_cutset(d, c=1.0, max_iters=300, seed=0)
print("loop cutset", sorted(res.cutset), "weight", round(res.weight, 6))
print("valid:", validate_loop_cutset(d, res.cutset))
print("empty set valid:", validate_loop_cutset(d, set()))

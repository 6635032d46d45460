"""
A small benchmark
=================

Generate random networks, solve each with the restart driver and with the
greedy baseline, and tabulate the results.  The same flags always give the
same bytes, so tables can be diffed across runs.
"""

from loopcutset import AlgoSpec, ExperimentConfig, emit_table, run_suite

cfg = ExperimentConfig(n_vertices=15, n_edges=25, domain_lo=2, domain_hi=6, graph_count=20,
                       algorithms=(AlgoSpec("wra", 1.0, 300), AlgoSpec("greedy")), seed=0)
rows, summary = run_suite(cfg)
print(summary.format())
print(emit_table(rows[:3], "csv").decode())

# the command-line equivalent:
#   loopcutset bench --seed 0 --graphs 20 --format csv --out table.csv

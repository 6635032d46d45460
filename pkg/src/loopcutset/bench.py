"""Random Bayesian-network instances and head-to-head benchmark suites.

The instance generator is permutation-oriented: pick a uniformly random
vertex order, draw ``n_edges`` distinct unordered pairs uniformly and point
every edge from the earlier vertex to the later one.  This is an
approximation of the classic random-network procedure used in older
loop cutset comparisons, whose exact parameters are not published.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Dict, List, Optional, Sequence

import numpy as np

from .baselines import brute_force_min_wfvs, greedy_wfvs
from .bayes import BayesianDag, loop_cutset, psi, split_graph
from .randomized import CutsetResult, stream

ALGORITHMS = ("wra", "greedy", "exact")
LABELS = {"wra": "WRA", "greedy": "greedy (reconstructed)", "exact": "exact"}
CSV_HEADER = "graph_id,algo,weight,size,iterations,seed"


class SuiteError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlgoSpec:
    name: str
    c: float = 1.0
    max_iters: int = 300

    def __post_init__(self):
        if self.name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.name!r}; choose from {ALGORITHMS}")
        if not self.c >= 1 or self.max_iters < 1:
            raise ValueError("need c >= 1 and max_iters >= 1")


@dataclass(frozen=True)
class ExperimentConfig:
    n_vertices: int = 15
    n_edges: int = 25
    domain_lo: int = 2
    domain_hi: int = 6
    graph_count: int = 100
    algorithms: Sequence[AlgoSpec] = (AlgoSpec("wra"), AlgoSpec("greedy"))
    seed: int = 0

    def __post_init__(self):
        n = self.n_vertices
        if n < 0 or self.n_edges < 0:
            raise ValueError("counts must be non-negative")
        if self.n_edges > n * (n - 1) // 2:
            raise ValueError(f"{self.n_edges} edges do not fit in a simple graph on {n} vertices")
        if not 2 <= self.domain_lo <= self.domain_hi:
            raise ValueError("need 2 <= domain_lo <= domain_hi")
        if self.graph_count < 1:
            raise ValueError("graph_count must be >= 1")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")


@dataclass
class ComparisonRow:
    graph_id: int
    seed: int
    results: Dict[str, CutsetResult]
    winner: Optional[str] = None  # "first" | "second" | "tie" for the first two algorithms


@dataclass
class SuiteSummary:
    names: List[str]
    first_wins: int = 0
    second_wins: int = 0
    ties: int = 0
    mean_weight: Dict[str, float] = field(default_factory=dict)
    mean_size: Dict[str, float] = field(default_factory=dict)

    def format(self) -> str:
        lines = []
        if len(self.names) >= 2:
            a, b = (LABELS[n] for n in self.names[:2])
            lines.append(f"{a} better: {self.first_wins}  {b} better: {self.second_wins}  "
                         f"equal: {self.ties}")
        for n in self.names:
            lines.append(f"{LABELS[n]}: mean weight {self.mean_weight[n]:.6f}, "
                         f"mean size {self.mean_size[n]:.6f}")
        return "\n".join(lines)


def run_seed(cfg_seed: int, index: int) -> int:
    """Solver seed recorded for graph ``index`` of a suite."""
    ss = np.random.SeedSequence(cfg_seed, spawn_key=(index, 1))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def gen_random_dag(cfg: ExperimentConfig, index: int) -> BayesianDag:
    n, m = cfg.n_vertices, cfg.n_edges
    if m > n * (n - 1) // 2:
        raise ValueError("infeasible edge count")
    rng = stream(cfg.seed, index)
    order = rng.permutation(n)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = sorted(rng.choice(len(pairs), size=m, replace=False).tolist()) if m else []
    edges = []
    for k in chosen:
        u, v = pairs[k]
        edges.append((u, v) if rank[u] < rank[v] else (v, u))
    domains = rng.integers(cfg.domain_lo, cfg.domain_hi + 1, size=n)
    return BayesianDag({v: int(domains[v]) for v in range(n)}, edges)


def solve(d: BayesianDag, algo: AlgoSpec, seed: int) -> CutsetResult:
    """Run one algorithm on a network, returning a cutset over original vertices."""
    if algo.name == "wra":
        return loop_cutset(d, algo.c, algo.max_iters, seed)
    s = split_graph(d)
    if algo.name == "greedy":
        cut = psi(s, greedy_wfvs(s.graph).cutset)
    else:
        cut = psi(s, brute_force_min_wfvs(s.graph).optimum_set)
    return CutsetResult(cut, d.cutset_weight(cut), len(cut), 1, seed)


def _reported(w: float) -> Decimal:
    return Decimal(f"{w:.6f}")


def run_suite(cfg: ExperimentConfig):
    """Generate ``cfg.graph_count`` networks and run every algorithm on each.

    Returns ``(rows, summary)``.  The winner tag compares the first two
    algorithms on their reported (6-decimal) weights.
    """
    names = [a.name for a in cfg.algorithms]
    rows = []
    for i in range(cfg.graph_count):
        d = gen_random_dag(cfg, i)
        seed = run_seed(cfg.seed, i)
        results = {}
        for algo in cfg.algorithms:
            try:
                results[algo.name] = solve(d, algo, seed)
            except Exception as exc:
                raise SuiteError(f"graph {i} (seed {seed}), algorithm {algo.name}: {exc}") from exc
        row = ComparisonRow(i, seed, results)
        if len(names) >= 2:
            a, b = (_reported(results[n].weight) for n in names[:2])
            row.winner = "first" if a < b else "second" if b < a else "tie"
        rows.append(row)
    summary = SuiteSummary(names)
    for row in rows:
        if row.winner == "first":
            summary.first_wins += 1
        elif row.winner == "second":
            summary.second_wins += 1
        elif row.winner == "tie":
            summary.ties += 1
    for n in names:
        summary.mean_weight[n] = math.fsum(r.results[n].weight for r in rows) / len(rows)
        summary.mean_size[n] = sum(r.results[n].size for r in rows) / len(rows)
    return rows, summary


def _records(rows):
    for row in rows:
        for name, res in row.results.items():
            yield row.graph_id, name, res.weight, res.size, res.iterations_used, row.seed


def emit_table(rows, format: str = "csv") -> bytes:
    """Serialize rows as CSV (header ``graph_id,algo,weight,size,iterations,seed``)
    or as a JSON array of the same records.  Weights carry 6 decimals."""
    if format == "csv":
        lines = [CSV_HEADER]
        lines += [f"{g},{a},{w:.6f},{s},{it},{sd}" for g, a, w, s, it, sd in _records(rows)]
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        items = [
            "{" + f'"graph_id": {g}, "algo": {json.dumps(a)}, "weight": {w:.6f}, '
            f'"size": {s}, "iterations": {it}, "seed": {sd}' + "}"
            for g, a, w, s, it, sd in _records(rows)
        ]
        return ("[" + ",\n ".join(items) + "]\n").encode()
    raise ValueError(f"unknown format {format!r}")

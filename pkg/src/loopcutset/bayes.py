"""Loop cutsets of Bayesian network DAGs via the splitting graph."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from .graph import UNSELECTABLE, WeightedMultigraph, is_fvs
from .randomized import CutsetResult, wra


class BayesianDag:
    """Directed acyclic graph with a domain size (>= 2) per vertex.

    Validated on construction: no self-edges, no duplicate edges, no
    directed cycle.
    """

    def __init__(self, domains: Dict[int, int], edges: Iterable[Tuple[int, int]] = ()):
        self.domains: Dict[int, int] = {}
        for v, size in domains.items():
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex id must be a non-negative int, got {v!r}")
            if int(size) != size or size < 2:
                raise ValueError(f"domain size of {v} must be an integer >= 2, got {size!r}")
            self.domains[v] = int(size)
        self.edges: list[Tuple[int, int]] = []
        seen = set()
        for u, v in edges:
            if u not in self.domains or v not in self.domains:
                raise ValueError(f"edge {u}->{v} references an unknown vertex")
            if u == v:
                raise ValueError(f"self-edge at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {u}->{v}")
            seen.add((u, v))
            self.edges.append((u, v))
        if self._has_cycle():
            raise ValueError("graph has a directed cycle")

    def _has_cycle(self) -> bool:
        indeg = {v: 0 for v in self.domains}
        children: Dict[int, list] = {v: [] for v in self.domains}
        for u, v in self.edges:
            indeg[v] += 1
            children[u].append(v)
        queue = deque(v for v, d in indeg.items() if d == 0)
        seen = 0
        while queue:
            u = queue.popleft()
            seen += 1
            for v in children[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        return seen != len(self.domains)

    def __len__(self):
        return len(self.domains)

    def weight(self, v: int) -> float:
        return math.log2(self.domains[v])

    def cutset_weight(self, s: Iterable[int]) -> float:
        return math.fsum(self.weight(v) for v in sorted(set(s)))

    def __repr__(self):
        return f"BayesianDag(|V|={len(self.domains)}, |E|={len(self.edges)})"


def in_vertex(v: int) -> int:
    return 2 * v


def out_vertex(v: int) -> int:
    return 2 * v + 1


@dataclass
class SplitGraph:
    """Splitting graph plus the map from split ids to ``(original, role)``.

    Vertex ``v`` of the DAG becomes ``2v`` (in, unselectable) and ``2v+1``
    (out, weight ``log2`` of the domain size).
    """

    graph: WeightedMultigraph
    origin: Dict[int, Tuple[int, str]]


def split_graph(d: BayesianDag) -> SplitGraph:
    g = WeightedMultigraph()
    origin = {}
    for v in sorted(d.domains):
        g.add_vertex(in_vertex(v), UNSELECTABLE)
        g.add_vertex(out_vertex(v), d.weight(v))
        origin[in_vertex(v)] = (v, "in")
        origin[out_vertex(v)] = (v, "out")
        g.add_edge(in_vertex(v), out_vertex(v))
    for u, v in d.edges:
        g.add_edge(out_vertex(u), in_vertex(v))
    return SplitGraph(g, origin)


def psi(s: SplitGraph, f: Iterable[int]) -> frozenset:
    """Collapse split vertices back onto their originals."""
    out = set()
    for x in f:
        try:
            out.add(s.origin[x][0])
        except KeyError:
            raise KeyError(f"unknown split vertex {x}") from None
    return frozenset(out)


def loop_cutset(d: BayesianDag, c: float = 1.0, max_iters: int = 300,
                seed: int = 0) -> CutsetResult:
    """Randomized minimum-weight loop cutset (WRA on the splitting graph).

    The weight is the sum of ``log2`` domain sizes over the cutset.
    """
    s = split_graph(d)
    res = wra(s.graph, c, max_iters, seed)
    cut = psi(s, res.cutset)
    return CutsetResult(cut, d.cutset_weight(cut), len(cut), res.iterations_used,
                        seed, res.history)


def validate_loop_cutset(d: BayesianDag, s: Iterable[int]) -> bool:
    """True iff ``s`` contains an allowed vertex of every loop of ``d``.

    Checked as a forest test on the splitting graph with the out-copies of
    ``s`` removed, which avoids enumerating loops.
    """
    members = set(s)
    for v in members:
        if v not in d.domains:
            raise KeyError(f"unknown vertex {v}")
    return is_fvs(split_graph(d).graph, {out_vertex(v) for v in members})

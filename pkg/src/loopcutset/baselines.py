"""Exact brute-force WFVS oracle and a deterministic greedy baseline."""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import WeightedMultigraph, cycle_vertices, is_finite, is_fvs, set_weight
from .randomized import CutsetResult, InfeasibleError
from .reduction import reduce_to_branchy

MAX_ORACLE_CANDIDATES = 25


@dataclass(frozen=True)
class OracleResult:
    optimum_weight: float
    optimum_set: frozenset
    min_cardinality_k: int


def brute_force_min_wfvs(g: WeightedMultigraph,
                         max_candidates: int = MAX_ORACLE_CANDIDATES) -> OracleResult:
    """Exact minimum-weight FVS by best-first subset enumeration.

    Subsets of finite-weight vertices are popped in increasing
    ``(weight, size, sorted ids)`` order and the first one that is an FVS
    is returned, so it is the lexicographically smallest among the
    lightest, smallest optima.  A subset is only extended by a vertex with
    a larger id that still lies on a cycle after removing the subset; every
    minimal FVS is reachable this way.  No linkpoint bypassing is used, so
    the oracle stays independent of the reductions it is used to check.
    """
    core = cycle_vertices(g)
    cand = sorted(v for v in core if is_finite(g.weight(v)))
    if len(cand) > max_candidates:
        raise ValueError(f"{len(cand)} candidate vertices exceed the oracle limit "
                         f"of {max_candidates}")
    if not is_fvs(g, cand):
        raise InfeasibleError("a cycle consists only of unselectable vertices")
    w = {v: g.weight(v) for v in cand}
    heap = [(0.0, 0, ())]
    while heap:
        weight, size, subset = heapq.heappop(heap)
        alive = cycle_vertices(g, subset)
        if not alive:
            return OracleResult(weight, frozenset(subset), size)
        last = subset[-1] if subset else -1
        for v in cand:
            if v > last and v in alive:
                ext = subset + (v,)
                heapq.heappush(heap, (set_weight(w[x] for x in ext), size + 1, ext))
    raise AssertionError("unreachable: all candidates form an FVS")


def greedy_wfvs(g: WeightedMultigraph) -> CutsetResult:
    """Greedy baseline: branchy-reduce, then delete the vertex maximizing
    degree/weight (ties to the smallest id), until nothing is left."""
    h = g.copy()
    f: list[int] = []
    while True:
        h, forced = reduce_to_branchy(h, inplace=True)
        f.extend(sorted(forced))
        if h.is_empty():
            break
        best = max((v for v in sorted(h) if is_finite(h.weight(v))),
                   key=lambda v: (h.degree(v) / h.weight(v), -v), default=None)
        if best is None:
            raise InfeasibleError("a cycle consists only of unselectable vertices")
        f.append(best)
        h.remove_vertex(best)
    w = set_weight(g.weight(v) for v in f)
    if not is_finite(w):
        raise InfeasibleError("a cycle consists only of unselectable vertices")
    return CutsetResult(frozenset(f), w, len(f))

"""Kernelizing reductions that strip leaves, bypass linkpoints and harvest
self-loop vertices.

Both reductions use the same work queue: it is seeded with all vertices in
ascending id order and a vertex is re-enqueued (at the back, if not already
waiting) whenever one of its incident edges changes.  The queue order makes
the forced set deterministic.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Tuple

from .graph import WeightedMultigraph

BypassRule = Callable[[WeightedMultigraph, int], bool]


def _always(g: WeightedMultigraph, v: int) -> bool:
    return True


def _has_lighter_or_equal_neighbor(g: WeightedMultigraph, v: int) -> bool:
    wv = g.weight(v)
    return any(g.weight(u) <= wv for u in g.neighbors(v))


def _reduce(g: WeightedMultigraph, can_bypass: BypassRule,
            inplace: bool = False) -> Tuple[WeightedMultigraph, set[int]]:
    h = g if inplace else g.copy()
    forced: set[int] = set()
    queue = deque(sorted(h))
    waiting = set(queue)

    def push(vs):
        for u in sorted(vs):
            if u not in waiting:
                waiting.add(u)
                queue.append(u)

    while queue:
        v = queue.popleft()
        waiting.discard(v)
        if v not in h:
            continue
        if h.has_self_loop(v):
            forced.add(v)
            push(h.remove_vertex(v))
            continue
        d = h.degree(v)
        if d <= 1:
            push(h.remove_vertex(v))
        elif d == 2 and can_bypass(h, v):
            ends = [u for u, mult in h.neighbors(v).items() for _ in range(mult)]
            h.remove_vertex(v)
            h.add_edge(ends[0], ends[1])
            push(set(ends))
    return h, forced


def reduce_to_rich(g: WeightedMultigraph, inplace: bool = False):
    """Reduce ``g`` to a rich graph, ignoring weights.

    Returns ``(reduced, forced)``.  Leaves are deleted, every linkpoint is
    replaced by an edge joining its two neighbours, and any vertex carrying
    a self-loop is moved to ``forced``.  ``forced`` plus any minimum FVS of
    ``reduced`` is a minimum FVS of ``g``.
    """
    return _reduce(g, _always, inplace)


def reduce_to_branchy(g: WeightedMultigraph, inplace: bool = False):
    """Weight-aware reduction to a branchy graph.

    A linkpoint is bypassed only if some neighbour weighs no more than it
    does (ties bypass).  Surviving linkpoints are adjacent to branchpoints
    only.  The optimal weight is preserved:
    ``w(forced) + opt(reduced) == opt(g)``.
    """
    return _reduce(g, _has_lighter_or_equal_neighbor, inplace)


def is_rich(g: WeightedMultigraph) -> bool:
    return all(g.degree(v) >= 3 and not g.has_self_loop(v) for v in g)


def is_branchy(g: WeightedMultigraph) -> bool:
    for v in g:
        if g.has_self_loop(v):
            return False
        d = g.degree(v)
        if d <= 1:
            return False
        if d == 2 and any(g.degree(u) < 3 for u in g.neighbors(v)):
            return False
    return True

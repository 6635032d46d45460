"""Randomized restart solvers for (weighted) feedback vertex set.

Random streams
--------------
All randomness comes from numpy's PCG64 bit generator.  Drivers derive an
independent stream for restart ``t`` from ``SeedSequence(seed,
spawn_key=(t,))``, so a restart's outcome depends only on ``(seed, t)``
and restarts could be farmed out to workers without changing results.
The single-run functions take an already constructed
``numpy.random.Generator``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .graph import UNSELECTABLE, WeightedMultigraph, is_finite, set_weight
from .reduction import reduce_to_branchy, reduce_to_rich

_SATURATED = 2 ** 63 - 1


def stream(seed: int, index: int) -> np.random.Generator:
    """Generator for restart ``index`` of a run seeded with ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


@dataclass(frozen=True)
class AlgorithmParams:
    j: int = 1
    c: float = 1.0
    max_iters: int = 300
    seed: int = 0

    def __post_init__(self):
        if self.j < 1:
            raise ValueError("j must be >= 1")
        if not self.c >= 1:
            raise ValueError("c must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class CutsetResult:
    """A feedback vertex set with its weight and run metadata.

    ``history`` lists ``(iteration, weight, size)`` for every accepted
    solution of an anytime run (iteration 0 is the initial guess).
    """

    cutset: frozenset
    weight: float
    size: int
    iterations_used: int = 1
    seed: Optional[int] = None
    history: Tuple[Tuple[int, float, int], ...] = field(default=(), compare=False)

    @property
    def sort_key(self):
        return (self.weight, tuple(sorted(self.cutset)))


class InfeasibleError(ValueError):
    """No finite-weight feedback vertex set exists."""


def _result(g: WeightedMultigraph, f, **kw) -> CutsetResult:
    w = set_weight(g.weight(v) for v in f)
    if w is UNSELECTABLE:
        raise InfeasibleError("a cycle consists only of unselectable vertices")
    return CutsetResult(frozenset(f), w, len(f), **kw)


# -- selection rules ----------------------------------------------------

def degree_probabilities(g: WeightedMultigraph) -> Dict[int, float]:
    """Exact distribution of the degree-proportional rule over finite-weight vertices."""
    cand = [v for v in sorted(g) if is_finite(g.weight(v)) and g.degree(v) > 0]
    total = sum(g.degree(v) for v in cand)
    if total == 0:
        raise ValueError("no finite-weight vertex with positive degree")
    return {v: g.degree(v) / total for v in cand}


def ratio_probabilities(g: WeightedMultigraph) -> Dict[int, float]:
    """Exact distribution of the degree-over-weight rule."""
    ratios = {v: g.degree(v) / g.weight(v) for v in sorted(g)
              if is_finite(g.weight(v)) and g.degree(v) > 0}
    total = math.fsum(ratios.values())
    if total == 0:
        raise ValueError("all degree/weight ratios are zero")
    return {v: r / total for v, r in ratios.items()}


def _draw(masses: Dict[int, float], rng: np.random.Generator) -> int:
    total = math.fsum(masses.values())
    x = rng.random() * total
    acc = 0.0
    last = None
    for v, m in masses.items():
        acc += m
        last = v
        if x < acc:
            return v
    return last


def pick_degree_proportional(g: WeightedMultigraph, rng: np.random.Generator) -> int:
    """Pick a finite-weight vertex with probability proportional to its degree.

    Unselectable vertices carry no mass.  On graphs without self-loops this
    is the same distribution as picking a uniform edge and then a uniform
    endpoint of it.
    """
    masses = {v: float(g.degree(v)) for v in sorted(g)
              if is_finite(g.weight(v)) and g.degree(v) > 0}
    if not masses:
        raise ValueError("no finite-weight vertex with positive degree")
    return _draw(masses, rng)


def pick_degree_over_weight(g: WeightedMultigraph, rng: np.random.Generator) -> int:
    masses = {v: g.degree(v) / g.weight(v) for v in sorted(g)
              if is_finite(g.weight(v)) and g.degree(v) > 0}
    if not masses:
        raise ValueError("all degree/weight ratios are zero")
    return _draw(masses, rng)


# -- single guesses -----------------------------------------------------

def _single(g: WeightedMultigraph, j: int, rng, reduce, pick,
            weighted: bool) -> Optional[CutsetResult]:
    if j < 1:
        raise ValueError("j must be >= 1")
    h = g.copy()
    f: list[int] = []
    while True:
        h, forced = reduce(h, inplace=True)
        if weighted and any(not is_finite(g.weight(v)) for v in forced):
            raise InfeasibleError("a cycle consists only of unselectable vertices")
        f.extend(sorted(forced))
        if len(f) > j:
            return None
        if h.is_empty():
            return _result(g, f)
        if len(f) == j:
            return None
        v = pick(h, rng)
        f.append(v)
        h.remove_vertex(v)


def single_guess(g: WeightedMultigraph, j: int, rng: np.random.Generator) -> Optional[CutsetResult]:
    """One randomized FVS guess of size at most ``j``; ``None`` means Fail.

    Weights are ignored: the graph is reduced to a rich graph and vertices
    are picked proportionally to degree.  Forced self-loop vertices count
    towards the budget ``j``.  The reported weight is the sum of the input
    weights of the chosen vertices.
    """
    return _single(g, j, rng, reduce_to_rich, pick_degree_proportional, weighted=False)


def single_wguess_i(g: WeightedMultigraph, j: int, rng: np.random.Generator) -> Optional[CutsetResult]:
    """Weighted guess: branchy reduction, degree-proportional picks."""
    return _single(g, j, rng, reduce_to_branchy, pick_degree_proportional, weighted=True)


def single_wguess_ii(g: WeightedMultigraph, j: int, rng: np.random.Generator) -> Optional[CutsetResult]:
    """Weighted guess: branchy reduction, picks proportional to degree/weight."""
    return _single(g, j, rng, reduce_to_branchy, pick_degree_over_weight, weighted=True)


# -- drivers ------------------------------------------------------------

def restart_count(c: float, base: int, exponent: float, cap: int = _SATURATED) -> int:
    """``min(cap, ceil(c * base**exponent))`` without overflowing."""
    try:
        value = c * float(base) ** exponent
    except OverflowError:
        return cap
    if not math.isfinite(value) or value >= cap:
        return cap
    return min(cap, math.ceil(value))


def repeated_guess(g: WeightedMultigraph, c: float = 1.0, seed: int = 0) -> CutsetResult:
    """Unweighted driver: try j = 1, 2, ... with ``ceil(c * 4**j)`` guesses each.

    Returns the first successful guess.  ``iterations_used`` counts all
    guesses made, and guess number ``t`` uses ``stream(seed, t)``.
    """
    if not c >= 1:
        raise ValueError("c must be >= 1")
    t = 0
    for j in range(1, max(1, len(g)) + 1):
        for _ in range(restart_count(c, 4, j)):
            res = single_guess(g, j, stream(seed, t))
            t += 1
            if res is not None:
                return CutsetResult(res.cutset, res.weight, res.size, t, seed)
    raise AssertionError("unreachable: j = |V| always succeeds")


def repeated_wguess_i(g: WeightedMultigraph, c: float, j: int,
                      seed: int = 0) -> Optional[CutsetResult]:
    """Lightest of ``ceil(c * 6**j)`` SingleWGuessI runs at budget ``j``.

    Returns ``None`` when every run fails, which indicates that a minimum
    weight FVS has more than ``j`` vertices with high probability.  Equal
    weights are broken by the lexicographically smallest sorted vertex list.
    """
    if not c >= 1:
        raise ValueError("c must be >= 1")
    if j < 1:
        raise ValueError("j must be >= 1")
    n = restart_count(c, 6, j)
    best = None
    for t in range(n):
        res = single_wguess_i(g, j, stream(seed, t))
        if res is not None and (best is None or res.sort_key < best.sort_key):
            best = res
    if best is None:
        return None
    return CutsetResult(best.cutset, best.weight, best.size, n, seed)


def wra(g: WeightedMultigraph, c: float = 1.0, max_iters: int = 300, seed: int = 0,
        guess: Callable = single_wguess_i) -> CutsetResult:
    """Anytime weighted randomized algorithm.

    Starts from one full-budget guess and keeps drawing guesses while the
    iteration counter is at most ``M = min(max_iters, ceil(c * 6**w(F)))``,
    where ``w(F)`` is the best weight so far.  A guess that is no heavier
    than the incumbent replaces it and ``M`` is recomputed.  Guess ``t``
    (``t = 0`` for the initial one) uses ``stream(seed, t)``.
    """
    if not c >= 1:
        raise ValueError("c must be >= 1")
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    budget = max(1, len(g))
    best = guess(g, budget, stream(seed, 0))
    history = [(0, best.weight, best.size)]
    m = restart_count(c, 6, best.weight, cap=max_iters)
    i = 1
    while i <= m:
        cand = guess(g, budget, stream(seed, i))
        if cand.weight <= best.weight:
            best = cand
            history.append((i, cand.weight, cand.size))
            m = restart_count(c, 6, best.weight, cap=max_iters)
        i += 1
    return CutsetResult(best.cutset, best.weight, best.size, i - 1, seed, tuple(history))

"""Weighted undirected multigraphs with parallel edges and self-loops.

Vertices carry either a strictly positive float weight or the
``UNSELECTABLE`` marker, which orders above every finite weight and is
absorbing under addition.  Edge multiplicities are stored as counts.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Tuple, Union


@functools.total_ordering
class _Unselectable:
    """Singleton weight of vertices that may never enter a cutset."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNSELECTABLE"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("UNSELECTABLE")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, float)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, float)):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, (int, float)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_Unselectable, ())


UNSELECTABLE = _Unselectable()

Weight = Union[float, _Unselectable]


def is_finite(w: Weight) -> bool:
    return w is not UNSELECTABLE


def check_weight(w) -> Weight:
    """Validate a vertex weight, returning it as a float or the marker."""
    if w is UNSELECTABLE:
        return w
    w = float(w)
    if not (w > 0 and math.isfinite(w)):
        raise ValueError(f"vertex weight must be positive and finite, got {w!r}")
    return w


def set_weight(weights: Iterable[Weight]) -> Weight:
    """Sum weights; any UNSELECTABLE member makes the sum UNSELECTABLE.

    Finite parts are summed with ``math.fsum`` so equal vertex sets give
    bit-identical totals regardless of iteration order.
    """
    finite = []
    for w in weights:
        if w is UNSELECTABLE:
            return UNSELECTABLE
        finite.append(w)
    return math.fsum(finite)


@dataclass(frozen=True)
class PartitionStats:
    """Edge counts for a split V = F + X with X = V minus F."""

    e_x: int
    e_fx: int


class WeightedMultigraph:
    """Undirected multigraph keyed by non-negative integer vertex ids.

    ``_adj[v][u]`` is the number of parallel u-v edges; ``_adj[v][v]``
    counts self-loops at ``v``.  Degrees are cached and a self-loop adds
    two to the degree of its vertex.
    """

    def __init__(self, weights: Dict[int, Weight] | None = None,
                 edges: Iterable[Tuple[int, int]] = ()):
        self._w: Dict[int, Weight] = {}
        self._adj: Dict[int, Dict[int, int]] = {}
        self._deg: Dict[int, int] = {}
        self._m = 0
        for v, w in (weights or {}).items():
            self.add_vertex(v, w)
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def unit(cls, n: int, edges: Iterable[Tuple[int, int]] = ()) -> "WeightedMultigraph":
        """Graph on vertices ``0..n-1`` with unit weights."""
        return cls({v: 1.0 for v in range(n)}, edges)

    # -- construction -------------------------------------------------

    def add_vertex(self, v: int, weight: Weight = 1.0) -> None:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex id must be a non-negative int, got {v!r}")
        if v in self._w:
            raise ValueError(f"duplicate vertex {v}")
        self._w[v] = check_weight(weight)
        self._adj[v] = {}
        self._deg[v] = 0

    def add_edge(self, u: int, v: int, count: int = 1) -> None:
        if u not in self._w or v not in self._w:
            raise KeyError(f"edge ({u}, {v}) references an unknown vertex")
        if count < 1:
            raise ValueError("edge count must be positive")
        au = self._adj[u]
        au[v] = au.get(v, 0) + count
        if u == v:
            self._deg[u] += 2 * count
        else:
            av = self._adj[v]
            av[u] = av.get(u, 0) + count
            self._deg[u] += count
            self._deg[v] += count
        self._m += count

    def remove_vertex(self, v: int) -> list[int]:
        """Delete ``v`` with its incident edges; return its former neighbours."""
        adj = self._adj.pop(v)
        touched = []
        for u, mult in adj.items():
            self._m -= mult
            if u == v:
                continue
            del self._adj[u][v]
            self._deg[u] -= mult
            touched.append(u)
        del self._w[v]
        del self._deg[v]
        return touched

    def remove_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            self.remove_vertex(v)

    def copy(self) -> "WeightedMultigraph":
        g = WeightedMultigraph.__new__(WeightedMultigraph)
        g._w = dict(self._w)
        g._adj = {v: dict(a) for v, a in self._adj.items()}
        g._deg = dict(self._deg)
        g._m = self._m
        return g

    def subgraph_without(self, removed: Iterable[int]) -> "WeightedMultigraph":
        g = self.copy()
        for v in removed:
            g.remove_vertex(v)
        return g

    # -- queries ------------------------------------------------------

    def __contains__(self, v) -> bool:
        return v in self._w

    def __iter__(self) -> Iterator[int]:
        return iter(self._w)

    def __len__(self) -> int:
        return len(self._w)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedMultigraph):
            return NotImplemented
        return self._w == other._w and self._adj == other._adj

    def __repr__(self) -> str:
        return f"WeightedMultigraph(|V|={len(self)}, |E|={self._m})"

    @property
    def num_edges(self) -> int:
        return self._m

    def vertices(self) -> list[int]:
        return sorted(self._w)

    def weight(self, v: int) -> Weight:
        return self._w[v]

    @property
    def weights(self) -> Dict[int, Weight]:
        return dict(self._w)

    def degree(self, v: int) -> int:
        try:
            return self._deg[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v}") from None

    def neighbors(self, v: int) -> Dict[int, int]:
        """Mapping neighbour -> multiplicity (``v`` itself for self-loops)."""
        return self._adj[v]

    def multiplicity(self, u: int, v: int) -> int:
        return self._adj[u].get(v, 0)

    def has_self_loop(self, v: int) -> bool:
        return v in self._adj[v]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u <= v``, repeated per multiplicity."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u <= v:
                    for _ in range(self._adj[u][v]):
                        yield (u, v)

    def is_empty(self) -> bool:
        return not self._w

    def check_invariants(self) -> None:
        """Recompute degrees and edge count from scratch; raise on mismatch."""
        total = 0
        for v, adj in self._adj.items():
            d = 0
            for u, mult in adj.items():
                if u not in self._w:
                    raise AssertionError(f"dangling endpoint {u} at {v}")
                if u == v:
                    d += 2 * mult
                else:
                    if self._adj[u].get(v) != mult:
                        raise AssertionError(f"asymmetric multiplicity {u}-{v}")
                    d += mult
            if d != self._deg[v]:
                raise AssertionError(f"cached degree of {v} is {self._deg[v]}, actual {d}")
            total += d
        if total != 2 * self._m:
            raise AssertionError("degree sum differs from twice the edge count")


def degree(g: WeightedMultigraph, v: int) -> int:
    return g.degree(v)


def is_fvs(g: WeightedMultigraph, f: Iterable[int]) -> bool:
    """True iff deleting ``f`` leaves a forest (no self-loop, parallel pair or cycle)."""
    removed = set(f)
    for v in removed:
        if v not in g:
            raise KeyError(f"unknown vertex {v}")
    parent = {v: v for v in g if v not in removed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def partition_stats(g: WeightedMultigraph, f: Iterable[int]) -> PartitionStats:
    fset = set(f)
    e_x = e_fx = 0
    for u, v in g.edges():
        a, b = u in fset, v in fset
        if not a and not b:
            e_x += 1
        elif a != b:
            e_fx += 1
    return PartitionStats(e_x, e_fx)


def cycle_vertices(g: WeightedMultigraph, removed: Iterable[int] = ()) -> set[int]:
    """Vertices of the 2-core of ``g`` minus ``removed`` (leaf stripping only).

    Every vertex lying on a cycle survives; the result is empty iff the
    remainder is a forest.
    """
    gone = set(removed)
    deg = {}
    for v in g:
        if v in gone:
            continue
        d = 0
        for u, mult in g.neighbors(v).items():
            if u not in gone:
                d += 2 * mult if u == v else mult
        deg[v] = d
    stack = [v for v, d in deg.items() if d <= 1]
    while stack:
        v = stack.pop()
        if v not in deg:
            continue
        del deg[v]
        for u, mult in g.neighbors(v).items():
            if u in deg and u != v:
                deg[u] -= mult
                if deg[u] <= 1:
                    stack.append(u)
    return set(deg)

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loopcutset import (UNSELECTABLE, BayesianDag, loop_cutset, psi, split_graph,
                        validate_loop_cutset)
from loopcutset.bayes import in_vertex, out_vertex
from oracles import brute_force_loop_cutset, dag_loops, undirected_simple_cycles


def random_dag(rng, n, p=0.45, lo=2, hi=5):
    order = rng.permutation(n)
    edges = [(int(order[i]), int(order[j])) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return BayesianDag({v: int(rng.integers(lo, hi + 1)) for v in range(n)}, edges)


dags = st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=15, unique=True),
    st.lists(st.integers(2, 9), min_size=n, max_size=n)))


def build(spec):
    n, pairs, doms = spec
    edges = sorted({(min(u, v), max(u, v)) for u, v in pairs if u != v})
    return BayesianDag(dict(enumerate(doms)), edges)


class TestBayesianDag:
    def test_rejects_cycles_duplicates_self_edges_and_small_domains(self):
        with pytest.raises(ValueError):
            BayesianDag({0: 2, 1: 2}, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            BayesianDag({0: 2, 1: 2}, [(0, 1), (0, 1)])
        with pytest.raises(ValueError):
            BayesianDag({0: 2}, [(0, 0)])
        with pytest.raises(ValueError):
            BayesianDag({0: 1})

    def test_log2_weights(self):
        d = BayesianDag({0: 2, 1: 8})
        assert d.weight(0) == 1.0 and d.weight(1) == 3.0


class TestSplitGraph:
    def test_single_edge(self):
        s = split_graph(BayesianDag({0: 2, 1: 4}, [(0, 1)]))
        g = s.graph
        assert len(g) == 4 and g.num_edges == 3
        assert g.weight(out_vertex(0)) == 1.0 and g.weight(out_vertex(1)) == 2.0
        assert g.weight(in_vertex(0)) is UNSELECTABLE and g.weight(in_vertex(1)) is UNSELECTABLE
        assert g.multiplicity(out_vertex(0), in_vertex(1)) == 1

    def test_empty_network(self):
        g = split_graph(BayesianDag({v: 3 for v in range(5)})).graph
        assert len(g) == 10 and g.num_edges == 5
        assert all(g.degree(v) == 1 for v in g)

    def test_diamond(self, diamond_dag):
        s = split_graph(diamond_dag)
        assert len(s.graph) == 8 and s.graph.num_edges == 8
        cycles = undirected_simple_cycles(8, list(s.graph.edges()))
        assert len(cycles) == 1 == len(dag_loops(diamond_dag))
        (cyc,) = cycles
        assert set().union(*cyc) == {out_vertex(0), in_vertex(1), out_vertex(1), in_vertex(3),
                                     out_vertex(2), in_vertex(2)}

    @settings(max_examples=150, deadline=None)
    @given(dags)
    def test_count_invariants(self, spec):
        d = build(spec)
        s = split_graph(d)
        assert len(s.graph) == 2 * len(d)
        assert s.graph.num_edges == len(d.edges) + len(d)
        for v in d.domains:
            assert s.origin[in_vertex(v)] == (v, "in") and s.origin[out_vertex(v)] == (v, "out")
            assert s.graph.multiplicity(in_vertex(v), out_vertex(v)) == 1
        for u, v in d.edges:
            assert s.graph.multiplicity(out_vertex(u), in_vertex(v)) == 1

    @staticmethod
    def _loop_image(d, loop):
        """Edge set of the split-graph cycle built from a loop's vertices:
        sinks keep their in-half, sources their out-half, others both."""
        directed = set(d.edges)
        edges = set()
        for e in loop:
            u, v = tuple(e)
            if (v, u) in directed:
                u, v = v, u
            edges.add(frozenset({out_vertex(u), in_vertex(v)}))
        for v in set().union(*loop):
            ins = sum((tuple(e - {v})[0], v) in directed for e in loop if v in e)
            if ins == 1:
                edges.add(frozenset({in_vertex(v), out_vertex(v)}))
        return frozenset(edges)

    @pytest.mark.parametrize("seed", range(30))
    def test_cycle_correspondence(self, seed):
        rng = np.random.default_rng(seed)
        d = random_dag(rng, int(rng.integers(3, 9)))
        s = split_graph(d)
        cycles = undirected_simple_cycles(len(s.graph), list(s.graph.edges()))
        loops = undirected_simple_cycles(len(d), d.edges)
        images = {self._loop_image(d, loop) for loop in loops}
        # every loop maps to its own cycle of the splitting graph
        assert len(images) == len(loops) and images <= cycles
        # any other cycle visits both halves of some vertex without the edge
        # joining them, i.e. two loops glued at that vertex
        for cyc in cycles - images:
            verts = set().union(*cyc)
            assert any(in_vertex(v) in verts and out_vertex(v) in verts
                       and frozenset({in_vertex(v), out_vertex(v)}) not in cyc
                       for v in d.domains)

    def test_glued_loops_give_an_extra_cycle(self):
        # p1, p2 -> v -> c1, c2 with p2 -> c1 and p1 -> c2: two triangles sharing v
        p1, p2, v, c1, c2 = range(5)
        d = BayesianDag({x: 2 for x in range(5)},
                        [(p1, v), (p2, v), (v, c1), (v, c2), (p2, c1), (p1, c2)])
        s = split_graph(d)
        assert len(undirected_simple_cycles(5, d.edges)) == 2
        cycles = undirected_simple_cycles(10, list(s.graph.edges()))
        assert len(cycles) == 3
        # the cutset problem is unaffected: {v} is a loop cutset and a split-graph FVS
        assert validate_loop_cutset(d, {v})
        assert brute_force_loop_cutset(d)[0] == 1.0


def test_psi():
    s = split_graph(BayesianDag({0: 2, 1: 3}, [(0, 1)]))
    assert psi(s, {out_vertex(1)}) == {1}
    assert psi(s, {in_vertex(1), out_vertex(1)}) == {1}
    assert psi(s, set()) == frozenset()
    with pytest.raises(KeyError):
        psi(s, {99})


class TestValidate:
    def test_examples(self, triangle_dag):
        assert not validate_loop_cutset(triangle_dag, {2})
        assert validate_loop_cutset(triangle_dag, {0})
        assert validate_loop_cutset(triangle_dag, {1})
        assert validate_loop_cutset(BayesianDag({0: 2, 1: 2}, [(0, 1)]), set())

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_loop_enumeration(self, seed):
        rng = np.random.default_rng(100 + seed)
        d = random_dag(rng, int(rng.integers(3, 8)))
        loops = dag_loops(d)
        for r in range(len(d) + 1):
            for sub in itertools.combinations(sorted(d.domains), r):
                s = set(sub)
                assert validate_loop_cutset(d, s) == all(s & allowed for allowed in loops)


class TestLoopCutset:
    def test_acyclic_skeleton(self):
        d = BayesianDag({0: 3, 1: 3, 2: 3}, [(0, 1), (0, 2)])
        res = loop_cutset(d)
        assert res.cutset == frozenset() and res.weight == 0

    def test_triangle(self, triangle_dag):
        res = loop_cutset(triangle_dag, seed=3)
        assert res.cutset in ({0}, {1}) and res.weight == 1.0
        assert brute_force_loop_cutset(triangle_dag)[0] == 1.0

    def test_diamond(self, diamond_dag):
        (allowed,) = dag_loops(diamond_dag)
        res = loop_cutset(diamond_dag, seed=1)
        assert res.size == 1 and res.cutset <= allowed

    @pytest.mark.parametrize("seed", range(10))
    def test_outputs_valid_cutsets(self, seed):
        rng = np.random.default_rng(seed)
        d = random_dag(rng, 10, p=0.35)
        res = loop_cutset(d, max_iters=30, seed=seed)
        assert validate_loop_cutset(d, res.cutset)
        assert math.isclose(res.weight, sum(math.log2(d.domains[v]) for v in res.cutset))

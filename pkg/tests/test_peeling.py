import math

import numpy as np
import pytest

from oddcycle import (
    InputError,
    PeelDecomposition,
    PeelParams,
    ShortCycle,
    complete_graph,
    cycle_graph,
    empty_graph,
    independent_set_via_peel,
    peel,
    random_bipartite_graph,
    random_graph,
    verify_mono_odd_cycle,
    verify_peel,
)
from oracles import graph_from_sets, random_adjacency_sets, simulate_peel


class TestPeelParams:
    def test_modes(self):
        p = PeelParams(4)
        assert not p.generalized_mode(9)  # 4 >= log2(9)
        assert p.generalized_mode(17)     # 4 < log2(17)
        assert p.arrest_factor(9) == pytest.approx(math.log2(9) / 4)
        assert PeelParams(3).arrest_factor(27) == pytest.approx(27 ** (1 / 3) - 1)

    def test_bounds(self):
        assert PeelParams(4).removed_bound(16) == 16  # factor 1, ceil(1*16)
        assert PeelParams(3).removed_bound(27) == math.ceil((1 - 27 ** (-1 / 3)) * 27)
        assert PeelParams(5).removed_bound(1) == 0

    def test_k_validation(self):
        with pytest.raises(InputError):
            PeelParams(0)


class TestPeelExamples:
    def test_even_cycle_decomposes(self):
        g = cycle_graph(16)
        out = peel(g, 4)
        assert isinstance(out, PeelDecomposition)
        assert len(out.removed) <= 16
        assert verify_peel(g, 4, out) is None

    def test_c9_k4(self):
        # Note: odd girth 9 equals 2k+1 here, so the no-conflict guarantee
        # does not apply; the procedure's arrest fires at depth 2 and the
        # balls stay clean. Frozen from the independent simulation.
        g = cycle_graph(9)
        out = peel(g, 4)
        assert isinstance(out, PeelDecomposition)
        assert sorted(int(v) for v in out.removed) == [2, 5, 7]
        assert [sorted(int(v) for v in c.vertices) for c in out.components] == [
            [0, 1, 8],
            [3, 4],
            [6],
        ]
        assert verify_peel(g, 4, out) is None

    def test_k4_short_cycle(self):
        g = complete_graph(4)
        out = peel(g, 2)
        assert isinstance(out, ShortCycle)
        assert out.cycle.length == 3
        assert verify_peel(g, 2, out) is None

    def test_empty_graph_rejected(self):
        with pytest.raises(InputError):
            peel(complete_graph(3).without([0, 1, 2]), 2)


class TestPeelAgainstSimulation:
    def check(self, adj, k, g=None):
        g = g if g is not None else graph_from_sets(adj)
        sim = simulate_peel(adj, k, active=[int(v) for v in g.active_vertices()])
        out = peel(g, k)
        if sim[0] == "cycle":
            _, (_, v, u) = sim
            assert isinstance(out, ShortCycle)
            # same conflict edge, endpoints in the same discovery order
            assert (out.cycle.vertices[0], out.cycle.vertices[-1]) == (v, u)
            assert verify_peel(g, k, out) is None
        else:
            _, removed, comps = sim
            assert isinstance(out, PeelDecomposition)
            assert frozenset(int(x) for x in out.removed) == removed
            got = tuple(
                (frozenset(int(x) for x in c.vertices), c.center, c.radius)
                for c in out.components
            )
            assert got == comps
            assert verify_peel(g, k, out) is None

    def test_random_graphs(self):
        rng = np.random.default_rng(42)
        for _ in range(120):
            n = int(rng.integers(2, 40))
            p = float(rng.uniform(0.05, 0.6))
            adj = random_adjacency_sets(n, p, rng)
            k = int(rng.integers(1, 10))
            self.check(adj, k)

    def test_masked_random_graphs(self):
        rng = np.random.default_rng(43)
        for _ in range(40):
            n = int(rng.integers(6, 40))
            adj = random_adjacency_sets(n, 0.3, rng)
            g = graph_from_sets(adj)
            drop = [int(v) for v in rng.choice(n, size=n // 4, replace=False)]
            g = g.without(drop)
            masked = [s - set(drop) if v not in drop else set() for v, s in enumerate(adj)]
            self.check(masked, int(rng.integers(1, 8)), g=g)


class TestPeelGuarantees:
    def test_high_odd_girth_never_short_cycles(self):
        # odd girth > 2k+1 makes a ball conflict impossible
        for m in (11, 15, 21, 33):
            for k in (1, 2, 3, (m - 3) // 2):
                g = cycle_graph(m)
                out = peel(g, k)
                assert isinstance(out, PeelDecomposition), (m, k)
                assert verify_peel(g, k, out) is None

    def test_short_cycle_length_bound(self):
        rng = np.random.default_rng(7)
        found = 0
        for _ in range(60):
            n = int(rng.integers(5, 40))
            g = random_graph(n, 0.4, int(rng.integers(1 << 30)))
            k = int(rng.integers(1, 8))
            out = peel(g, k)
            if isinstance(out, ShortCycle):
                found += 1
                assert out.cycle.length <= 2 * k + 1
                assert verify_mono_odd_cycle(g, out.cycle) is None
        assert found > 10

    def test_removed_bound_generalized_mode(self):
        # k below log2(n): the weaker (1 - n^(-1/k)) * n bound applies
        g = cycle_graph(33)
        out = peel(g, 3)
        assert isinstance(out, PeelDecomposition)
        assert len(out.removed) <= PeelParams(3).removed_bound(33)
        assert verify_peel(g, 3, out) is None


class TestIndependentSet:
    def test_even_cycle(self):
        g = cycle_graph(16)
        got = independent_set_via_peel(g, 4)
        assert not isinstance(got, ShortCycle)
        removed = len(peel(g, 4).removed)
        assert len(got) >= (16 - removed) / 2
        for u in got:
            for v in got:
                assert not g.has_edge(int(u), int(v))

    def test_edgeless(self):
        got = independent_set_via_peel(empty_graph(7), 3)
        assert sorted(int(v) for v in got) == list(range(7))

    def test_random_bipartite(self):
        g = random_bipartite_graph(64, 0.15, 3)
        got = independent_set_via_peel(g, 6)
        assert not isinstance(got, ShortCycle)
        removed = len(peel(g, 6).removed)
        assert len(got) >= (64 - removed) / 2
        matrix = g.masked_matrix()
        idx = [int(v) for v in got]
        assert not matrix[np.ix_(idx, idx)].any()

    def test_short_cycle_passthrough(self):
        got = independent_set_via_peel(complete_graph(4), 2)
        assert isinstance(got, ShortCycle)
        assert got.cycle.length == 3

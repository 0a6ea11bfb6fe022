"""Small graph constructors used by demos and tests."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def cycle_graph(m):
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m):
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def complete_graph(n):
    adj = ~np.eye(n, dtype=bool)
    return Graph(adj)


def complete_bipartite_graph(a, b):
    adj = np.zeros((a + b, a + b), dtype=bool)
    adj[:a, a:] = True
    adj[a:, :a] = True
    return Graph(adj)


def petersen_graph():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def empty_graph(n):
    return Graph(np.zeros((n, n), dtype=bool))


def random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    upper = rng.random((n, n)) < p
    adj = np.triu(upper, 1)
    adj = adj | adj.T
    return Graph(adj)


def random_bipartite_graph(n, p, seed):
    """Random bipartite graph: vertices split uniformly into two sides, each
    cross pair an edge with probability p."""
    rng = np.random.default_rng(seed)
    side = rng.integers(0, 2, size=n).astype(bool)
    cross = side[:, None] != side[None, :]
    upper = rng.random((n, n)) < p
    adj = np.triu(upper & cross, 1)
    adj = adj | adj.T
    return Graph(adj)


def disjoint_union(graphs):
    n = sum(g.n for g in graphs)
    adj = np.zeros((n, n), dtype=bool)
    offset = 0
    for g in graphs:
        adj[offset : offset + g.n, offset : offset + g.n] = g.masked_matrix()
        offset += g.n
    return Graph(adj)

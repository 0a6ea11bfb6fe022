"""Compact undirected graphs and the BFS/parity kernels everything builds on.

A ``Graph`` wraps an immutable boolean adjacency matrix plus an active-vertex
mask. Subgraphs of the form "G minus a deleted set" are views sharing the
matrix, so the peeling pipeline never copies adjacency. The BFS kernels run
on per-row Python-int bitmasks (arbitrary-precision words), which keeps the
inner loops at word speed for every size this package targets (n <= 2^13).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InputError


def _iter_bits(mask):
    """Yield set-bit indices of a Python int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _bits_to_array(mask):
    return np.fromiter(_iter_bits(mask), dtype=np.int64)


def _array_to_bits(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


class Graph:
    """Undirected graph on vertices 0..n-1 with an active-vertex mask.

    Immutable after construction; ``without``/``restricted_to`` return new
    views over the same adjacency matrix. Masked-out vertices have no
    incident active edges.
    """

    def __init__(self, adjacency, active=None):
        adj = np.asarray(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InputError("adjacency must be a square matrix")
        if adj.diagonal().any():
            raise InputError("graph must be irreflexive (no self-loops)")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency must be symmetric")
        self.n = adj.shape[0]
        self._adj = adj
        self._adj.setflags(write=False)
        if active is None:
            act = np.ones(self.n, dtype=bool)
        else:
            act = np.array(active, dtype=bool)
            if act.shape != (self.n,):
                raise InputError("active mask has wrong shape")
        self._active = act
        self._active.setflags(write=False)
        self._row_masks = None  # built lazily, cached (graph is immutable)

    @classmethod
    def from_edges(cls, n, edges):
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    # -- views ------------------------------------------------------------

    def without(self, vertices):
        """View of this graph with ``vertices`` deactivated."""
        act = self._active.copy()
        idx = np.asarray(list(vertices), dtype=np.int64)
        if idx.size:
            act[idx] = False
        return Graph(self._adj, act)

    def restricted_to(self, vertices):
        """View keeping only ``vertices`` (intersected with the current mask)."""
        keep = np.zeros(self.n, dtype=bool)
        idx = np.asarray(list(vertices), dtype=np.int64)
        if idx.size:
            keep[idx] = True
        return Graph(self._adj, self._active & keep)

    # -- queries ----------------------------------------------------------

    @property
    def active_mask(self):
        return self._active

    def active_vertices(self):
        return np.flatnonzero(self._active)

    @property
    def active_count(self):
        return int(self._active.sum())

    def is_active(self, v):
        return 0 <= v < self.n and bool(self._active[v])

    def has_edge(self, u, v):
        return (
            0 <= u < self.n
            and 0 <= v < self.n
            and bool(self._adj[u, v] and self._active[u] and self._active[v])
        )

    def neighbours(self, v):
        if not self.is_active(v):
            raise InputError(f"vertex {v} is not active")
        return np.flatnonzero(self._adj[v] & self._active)

    def degree(self, v):
        return int(self.neighbours(v).size)

    def edge_count(self):
        sub = self._adj & self._active[:, None] & self._active[None, :]
        return int(sub.sum()) // 2

    def masked_matrix(self):
        """Fresh boolean matrix of the active subgraph (verifier fodder)."""
        return self._adj & self._active[:, None] & self._active[None, :]

    def row_masks(self):
        """Per-vertex int bitmask of active neighbours (0 for inactive rows)."""
        if self._row_masks is None:
            sub = self._adj & self._active[None, :]
            packed = np.packbits(sub, axis=1, bitorder="little")
            masks = []
            for v in range(self.n):
                if self._active[v]:
                    masks.append(int.from_bytes(packed[v].tobytes(), "little"))
                else:
                    masks.append(0)
            self._row_masks = masks
        return self._row_masks

    def __repr__(self):
        return f"Graph(n={self.n}, active={self.active_count}, edges={self.edge_count()})"


@dataclass(frozen=True)
class LayeredBall:
    """BFS layers around a root: layer i holds exactly the vertices at distance i."""

    root: int
    layers: tuple  # tuple of np.ndarray, ascending vertex order per layer

    @property
    def depth(self):
        return len(self.layers) - 1

    def cumulative_sizes(self):
        sizes = [len(layer) for layer in self.layers]
        return list(np.cumsum(sizes))

    def vertices(self):
        return np.concatenate([np.sort(layer) for layer in self.layers])


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint independent sides covering the vertices they were built for."""

    side0: np.ndarray
    side1: np.ndarray


@dataclass(frozen=True)
class OddCycleCertificate:
    """A vertex sequence claimed to be a simple odd cycle, optionally monochromatic."""

    vertices: tuple
    colour: int | None = None

    @property
    def length(self):
        return len(self.vertices)

    def with_colour(self, colour):
        return OddCycleCertificate(self.vertices, colour)


@dataclass(frozen=True)
class OddClosedWalk:
    """Cyclic vertex sequence of odd length; repeats allowed."""

    vertices: tuple

    @property
    def length(self):
        return len(self.vertices)


def _union_rows(masks, frontier):
    out = 0
    for v in _iter_bits(frontier):
        out |= masks[v]
    return out


def bfs_layers(g, root, max_depth):
    """Exact BFS layers from ``root``, stopping at ``max_depth`` or when the
    frontier empties."""
    if not g.is_active(root):
        raise InputError(f"root {root} is not an active vertex")
    if max_depth < 0:
        raise InputError("max_depth must be >= 0")
    masks = g.row_masks()
    seen = 1 << root
    frontier = seen
    layers = [_bits_to_array(seen)]
    for _ in range(max_depth):
        frontier = _union_rows(masks, frontier) & ~seen
        if frontier == 0:
            break
        seen |= frontier
        layers.append(_bits_to_array(frontier))
    return LayeredBall(root=root, layers=tuple(layers))


def _conflict_cycle(parents, depths, u, w):
    """Odd cycle from a same-layer edge u-w: climb the two parent paths to
    their first common vertex, so all cycle vertices are distinct."""
    pu, pw = [u], [w]
    while parents[pu[-1]] is not None:
        pu.append(parents[pu[-1]])
    while parents[pw[-1]] is not None:
        pw.append(parents[pw[-1]])
    assert len(pu) == len(pw) and depths[u] == depths[w]
    t = 0
    while pu[t] != pw[t]:
        t += 1
    cycle = pu[: t + 1] + pw[:t][::-1]
    return OddCycleCertificate(vertices=tuple(int(v) for v in cycle))


def check_bipartite(g):
    """Two-colour the active vertices or certify an odd cycle.

    Returns a global :class:`Bipartition` (per component, the lowest-index
    vertex lands in side0) when g is bipartite; otherwise returns the
    :class:`OddCycleCertificate` built from the first BFS parity conflict.
    The returned cycle is some odd cycle, not necessarily a shortest one.
    """
    masks = g.row_masks()
    visited = 0
    side0 = 0
    side1 = 0
    for root in g.active_vertices():
        root = int(root)
        if (visited >> root) & 1:
            continue
        parents = {root: None}
        depths = {root: 0}
        comp_seen = 1 << root
        frontier = comp_seen
        side0 |= frontier
        depth = 0
        while frontier:
            # parity conflict <=> an edge inside a single BFS layer
            for v in _iter_bits(frontier):
                hit = masks[v] & frontier & ~((1 << (v + 1)) - 1)
                if hit:
                    u = next(_iter_bits(hit))
                    return _conflict_cycle(parents, depths, v, u)
            nxt = _union_rows(masks, frontier) & ~comp_seen
            if nxt == 0:
                break
            depth += 1
            for v in _iter_bits(nxt):
                pmask = masks[v] & frontier
                parents[v] = next(_iter_bits(pmask))
                depths[v] = depth
            comp_seen |= nxt
            if depth % 2 == 0:
                side0 |= nxt
            else:
                side1 |= nxt
            frontier = nxt
        visited |= comp_seen
    return Bipartition(side0=_bits_to_array(side0), side1=_bits_to_array(side1))


def components(g):
    """Connected components of the active subgraph, ordered by minimum vertex."""
    masks = g.row_masks()
    visited = 0
    comps = []
    for root in g.active_vertices():
        root = int(root)
        if (visited >> root) & 1:
            continue
        comp = 1 << root
        frontier = comp
        while frontier:
            frontier = _union_rows(masks, frontier) & ~comp
            comp |= frontier
        visited |= comp
        comps.append(_bits_to_array(comp))
    return comps


def odd_girth(g):
    """Exact odd girth with a witness cycle, or None when g is bipartite.

    Runs a BFS from every active vertex in the (implicit) bipartite double
    cover: the shortest odd closed walk through v has length dist(v_even,
    v_odd), and the minimum over v is the odd girth. The witness is extracted
    from the minimising walk, which is necessarily a simple cycle.
    """
    # Bipartite graphs would otherwise force every BFS to exhaust its
    # component; one parity sweep settles them up front.
    if isinstance(check_bipartite(g), Bipartition):
        return None
    masks = g.row_masks()
    best = None
    best_root = None
    for v in g.active_vertices():
        v = int(v)
        even_reach = 1 << v
        odd_reach = 0
        even_frontier = even_reach
        odd_frontier = 0
        depth = 0
        while True:
            depth += 1
            if best is not None and depth >= best - 1:
                break
            new_odd = _union_rows(masks, even_frontier) & ~odd_reach
            new_even = _union_rows(masks, odd_frontier) & ~even_reach
            if not new_odd and not new_even:
                break
            odd_reach |= new_odd
            even_reach |= new_even
            if (new_odd >> v) & 1:
                best = depth
                best_root = v
                break
            even_frontier, odd_frontier = new_even, new_odd
    if best is None:
        return None
    walk = _double_cover_walk(masks, best_root)
    cert = odd_cycle_from_walk(OddClosedWalk(tuple(walk)), g)
    assert cert.length == best
    return best, cert


def _double_cover_walk(masks, root):
    """Shortest closed odd walk through ``root`` via parent-tracked BFS over
    (vertex, parity) states."""
    start = (root, 0)
    goal = (root, 1)
    parents = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        u, p = state
        if state == goal:
            walk = []
            cur = state
            while cur is not None:
                walk.append(cur[0])
                cur = parents[cur]
            walk.reverse()      # root ... root, length = odd girth through root
            return walk[:-1]    # cyclic form, closure implicit
        for w in _iter_bits(masks[u]):
            nxt = (w, 1 - p)
            if nxt not in parents:
                parents[nxt] = state
                queue.append(nxt)
    raise AssertionError("double-cover BFS lost its target state")


def odd_cycle_from_walk(walk, g):
    """Extract a simple odd cycle (length <= |walk|) from an odd closed walk.

    Repeatedly splits the walk at its first repeated vertex into two closed
    subwalks and keeps the odd-length one.
    """
    verts = [int(v) for v in walk.vertices]
    if len(verts) % 2 == 0 or not verts:
        raise InputError(f"closed walk must have odd length, got {len(verts)}")
    for i, u in enumerate(verts):
        v = verts[(i + 1) % len(verts)]
        if not g.has_edge(u, v):
            raise InputError(f"walk step {i}: vertices {u} and {v} are not adjacent")
    while True:
        first = {}
        dup = None
        for idx, v in enumerate(verts):
            if v in first:
                dup = (first[v], idx)
                break
            first[v] = idx
        if dup is None:
            break
        i, j = dup
        inner = verts[i:j]          # closed subwalk (verts[j] == verts[i])
        outer = verts[:i] + verts[j:]
        verts = inner if len(inner) % 2 == 1 else outer
    return OddCycleCertificate(vertices=tuple(verts))


def shortest_path_within(g, component, x, y):
    """Shortest x-y path using only ``component`` vertices; list of vertices."""
    comp_mask = _array_to_bits(component)
    x, y = int(x), int(y)
    for v in (x, y):
        if not ((comp_mask >> v) & 1) or not g.is_active(v):
            raise InputError(f"vertex {v} is not an active member of the component")
    if x == y:
        return [x]
    masks = g.row_masks()
    parents = {x: None}
    frontier = 1 << x
    seen = frontier
    while frontier:
        nxt = _union_rows(masks, frontier) & comp_mask & ~seen
        if nxt == 0:
            break
        for v in _iter_bits(nxt):
            parents[v] = next(_iter_bits(masks[v] & frontier))
        seen |= nxt
        if (nxt >> y) & 1:
            path = [y]
            while parents[path[-1]] is not None:
                path.append(parents[path[-1]])
            path.reverse()
            return path
        frontier = nxt
    raise InputError(f"vertices {x} and {y} are not connected within the component")

"""Ball-peeling decomposition: delete thin BFS boundary layers so the residue
is bipartite with low-radius components, or trip over a short odd cycle.

Repeatedly grow BFS layers from the lowest-indexed active vertex and arrest
at the first depth j <= k whose layer is small relative to the ball grown so
far; the layer goes into the deleted set, the ball becomes a certified
component. Growth cannot beat the arrest factor for k straight steps without
overshooting n, so an arrest always exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import (
    Bipartition,
    OddCycleCertificate,
    _bits_to_array,
    _conflict_cycle,
    _iter_bits,
    _union_rows,
)


@dataclass(frozen=True)
class PeelParams:
    """Radius budget k and the derived arrest factor.

    For k >= log2(n) the factor is log2(n)/k and the deleted set stays below
    ceil(factor * n). For smaller k the generalized factor n^(1/k) - 1 applies
    and the guarantee weakens to ceil((1 - n^(-1/k)) * n).
    """

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"radius budget must be >= 1, got {self.k}")

    def generalized_mode(self, n):
        return n > 1 and self.k < math.log2(n)

    def arrest_factor(self, n):
        if n <= 1:
            return 0.0
        if self.generalized_mode(n):
            return n ** (1.0 / self.k) - 1.0
        return math.log2(n) / self.k

    def removed_bound(self, n):
        """Certified bound on the deleted-set size for an n-vertex run."""
        if n <= 1:
            return 0
        if self.generalized_mode(n):
            return math.ceil((1.0 - n ** (-1.0 / self.k)) * n)
        return math.ceil(self.arrest_factor(n) * n)


@dataclass(frozen=True)
class PeelComponent:
    """One certified ball: connected, centre eccentricity <= radius, bipartite."""

    vertices: np.ndarray
    center: int
    radius: int
    bipartition: Bipartition


@dataclass(frozen=True)
class PeelDecomposition:
    """Deleted set plus the bipartite low-radius components of G minus it."""

    removed: np.ndarray
    components: tuple


@dataclass(frozen=True)
class ShortCycle:
    """Peeling ran into a parity conflict inside a ball: an odd cycle of
    length <= 2k+1. A success outcome, not an error."""

    cycle: OddCycleCertificate


def peel(g, k):
    """Peel the active subgraph with radius budget k.

    Returns :class:`ShortCycle` on the first ball parity conflict, else a
    :class:`PeelDecomposition`. Deterministic: roots are the lowest active
    index, arrest takes the smallest depth.
    """
    params = PeelParams(k)
    n0 = g.active_count
    if n0 == 0:
        raise InputError("peel needs a nonempty graph")
    masks = g.row_masks()

    if params.generalized_mode(n0):
        factor = params.arrest_factor(n0)

        def arrested(layer, cum):
            return layer <= factor * cum

    else:
        log2n = math.log2(n0) if n0 > 1 else 0.0

        def arrested(layer, cum):
            return layer * k <= cum * log2n

    active = 0
    for v in g.active_vertices():
        active |= 1 << int(v)

    removed = 0
    comps = []
    while active:
        root = (active & -active).bit_length() - 1
        parents = {root: None}
        depths = {root: 0}
        ball = 1 << root
        ball_layers = [1 << root]
        frontier = ball
        boundary = 0
        radius = 0
        for depth in range(1, k + 1):
            nxt = _union_rows(masks, frontier) & active & ~ball
            size = nxt.bit_count()
            cum = ball.bit_count()
            # Arrest at depth k is forced: growth past the factor for k
            # straight steps would overshoot n, so in exact arithmetic an
            # arrest exists by then; the depth==k clause only guards float
            # rounding at the boundary.
            if arrested(size, cum) or depth == k:
                boundary = nxt
                radius = depth - 1
                break
            # layer joins the ball: check it for a parity conflict first
            for v in _iter_bits(nxt):
                parents[v] = next(_iter_bits(masks[v] & frontier))
                depths[v] = depth
            for v in _iter_bits(nxt):
                hit = masks[v] & nxt & ~((1 << (v + 1)) - 1)
                if hit:
                    u = next(_iter_bits(hit))
                    return ShortCycle(_conflict_cycle(parents, depths, v, u))
            ball |= nxt
            ball_layers.append(nxt)
            frontier = nxt
        even = 0
        odd = 0
        for i, layer in enumerate(ball_layers):
            if i % 2 == 0:
                even |= layer
            else:
                odd |= layer
        comps.append(
            PeelComponent(
                vertices=_bits_to_array(ball),
                center=root,
                radius=radius,
                bipartition=Bipartition(_bits_to_array(even), _bits_to_array(odd)),
            )
        )
        removed |= boundary
        active &= ~(ball | boundary)
    return PeelDecomposition(removed=_bits_to_array(removed), components=tuple(comps))


def independent_set_via_peel(g, k):
    """Independent set of size >= (n - |removed|)/2 from a peel decomposition.

    Takes the larger bipartition side of every component; sides from distinct
    components share no edges, so the union stays independent. When the peel
    finds a short odd cycle instead, that :class:`ShortCycle` is returned
    unchanged for the caller to handle.
    """
    outcome = peel(g, k)
    if isinstance(outcome, ShortCycle):
        return outcome
    picks = []
    for comp in outcome.components:
        s0, s1 = comp.bipartition.side0, comp.bipartition.side1
        picks.append(s0 if len(s0) >= len(s1) else s1)
    if not picks:
        return np.array([], dtype=np.int64)
    return np.sort(np.concatenate(picks))

"""End-to-end search for short monochromatic odd cycles in complete
edge-coloured graphs, composed from the certified primitives.

``find_mono_odd_cycle`` runs the recursive analysis:

  (1) base: when the target bound C*2^q/q^(1-eps) already exceeds n (or
      q <= 2), return the overall shortest monochromatic odd cycle from the
      per-colour odd-girth oracle.
  (2) bipartite reduction: a bipartite colour class lets us recurse on its
      larger side with that colour dropped.
  (3) short-cycle probe: peel each colour with budget k; any parity conflict
      or any colour of odd girth <= 2k+1 ends the run.
  (4) otherwise every peel decomposed; pool the deleted sets.
  (5) per colour, split the residual components at the small-size threshold.
  (6) if some colour carries few small-component vertices, shorten a seed
      cycle of that colour against the big components.
  (7) else run the derandomized complement selector over the big-component
      sides and hunt a surviving pair covered by no small component; for a
      complete colouring that pair cannot exist, so the branch either records
      its failed asserts (and optionally falls back to the oracle) or raises
      InternalInconsistency with the witness edge.

``proposition_pipeline`` is the wider-graph variant: one peel per colour
with k = ceil(2q(q+1)/delta), and a signature/pigeonhole self-check should
every peel decompose.

Every certificate these functions return passes the certify module; traces
record per-level branch, parameters, observed sizes and failed asserts.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .colouring import EdgeColouring, colour_class
from .errors import (
    InputError,
    InternalInconsistency,
    NoMonochromaticOddCycle,
    PipelineAssertError,
)
from .graph import Bipartition, OddCycleCertificate, check_bipartite, components, odd_girth
from .peeling import ShortCycle, peel
from .selector import SelectorInstance, select_complement
from .shortening import shorten_cycle


def default_k_rule(q):
    return 8 * q**3


def default_small_threshold_rule(q):
    return 4 * q**10


@dataclass
class PipelineParams:
    """Tunable constants of the analysis.

    The defaults reproduce the asymptotic argument (k = 8q^3, threshold
    4q^10, C large). Desk-scale n never reaches branches (4)-(7) under those
    defaults since 2k+1 exceeds n; the rules exist so tests can force every
    branch with small overrides.
    """

    eps: float = 0.5
    C: float = 4.0
    k_of_q: Callable = default_k_rule
    small_threshold_of_q: Callable = default_small_threshold_rule
    fallback: str = "oracle"  # "oracle" | "fail"

    def __post_init__(self):
        if not 0.0 < self.eps < 1.0:
            raise InputError(f"eps must lie in (0,1), got {self.eps}")
        if self.fallback not in ("oracle", "fail"):
            raise InputError(f"fallback must be 'oracle' or 'fail', got {self.fallback!r}")


@dataclass
class LevelTrace:
    """Observed values at one recursion level."""

    level: int
    q: int
    n: int
    branch: str = ""
    params: dict = field(default_factory=dict)
    sizes: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)
    asserts_failed: list = field(default_factory=list)
    fallback_used: bool = False
    bound_claimed: int | None = None

    def to_record(self):
        return {
            "level": self.level,
            "q": self.q,
            "n": self.n,
            "branch": self.branch,
            "params": self.params,
            "sizes": self.sizes,
            "steps": self.steps,
            "asserts_failed": self.asserts_failed,
            "fallback_used": self.fallback_used,
            "bound_claimed": self.bound_claimed,
        }


@dataclass
class PipelineTrace:
    levels: list = field(default_factory=list)

    def append(self, level):
        self.levels.append(level)

    def last(self):
        return self.levels[-1]

    def to_json_lines(self):
        return "".join(json.dumps(lv.to_record(), sort_keys=True) + "\n" for lv in self.levels)


@dataclass
class MonoOddCycle:
    """A verified-shape result: certificate, the bound claimed for it, and
    the trace of the run that produced it."""

    certificate: OddCycleCertificate
    bound_claimed: int | None
    trace: PipelineTrace


def min_colour_odd_cycle(c, girths=None):
    """Per-colour odd-girth oracle: (colour, length, certificate) of the
    overall shortest monochromatic odd cycle, or None when every colour
    class is bipartite."""
    best = None
    for i in range(c.q):
        got = girths[i] if girths is not None else odd_girth(colour_class(c, i))
        if got is None:
            continue
        length, cert = got
        if best is None or length < best[1]:
            best = (i, length, cert.with_colour(i))
    return best


def find_mono_odd_cycle(c, params=None):
    """Find a monochromatic odd cycle in a complete q-edge-coloured K_n."""
    if params is None:
        params = PipelineParams()
    if c.n < 3:
        raise InputError(f"need n >= 3 vertices, got {c.n}")
    trace = PipelineTrace()
    cert, bound = _find_level(c, params, trace, level=0)
    return MonoOddCycle(certificate=cert, bound_claimed=bound, trace=trace)


def _oracle_result(c, lvl, girths=None):
    best = min_colour_odd_cycle(c, girths)
    if best is None:
        raise NoMonochromaticOddCycle(
            "every colour class is bipartite; no monochromatic odd cycle exists"
        )
    _, length, cert = best
    lvl.sizes["oracle_length"] = length
    lvl.bound_claimed = c.n
    return cert, c.n


def _find_level(c, params, trace, level):
    q, n = c.q, c.n
    lvl = LevelTrace(level=level, q=q, n=n)
    lvl.params = {"eps": params.eps, "C": params.C}
    trace.append(lvl)

    # (1) base: the claimed bound is vacuous at this size
    if q <= 2 or params.C * 2**q / q ** (1.0 - params.eps) >= n:
        lvl.branch = "base"
        return _oracle_result(c, lvl)

    k = int(params.k_of_q(q))
    threshold = int(params.small_threshold_of_q(q))
    if k < 1 or threshold < 1:
        raise InputError(f"rules must be positive, got k={k} threshold={threshold}")
    lvl.params.update({"k": k, "small_threshold": threshold})

    # (2) bipartite reduction: drop a bipartite colour, recurse on the
    # larger side
    classes = [colour_class(c, i) for i in range(q)]
    seeds = {}
    for i in range(q):
        got = check_bipartite(classes[i])
        if isinstance(got, Bipartition):
            lvl.branch = "bipartite-reduction"
            lvl.sizes["dropped_colour"] = i
            reduced, kept = reduce_bipartite_colour(c, i, got)
            lvl.sizes["reduced_n"] = reduced.n
            if reduced.n < 3 or reduced.q < 1:
                lvl.fallback_used = True
                return _oracle_result(c, lvl)
            try:
                sub_cert, sub_bound = _find_level(reduced, params, trace, level + 1)
            except NoMonochromaticOddCycle:
                # Out of the complete-colouring regime the discarded side may
                # hold every odd cycle; answer from the oracle instead.
                lvl.fallback_used = True
                return _oracle_result(c, lvl)
            verts = [int(kept[v]) for v in sub_cert.vertices]
            colour = sub_cert.colour
            if colour is not None and colour >= i:
                colour += 1
            lvl.bound_claimed = sub_bound
            return OddCycleCertificate(tuple(verts), colour), sub_bound
        seeds[i] = got  # odd-cycle certificate; the shortening seed for colour i

    # (3) short-cycle probe: peel opportunistically, odd girth authoritatively
    lvl.steps.append("short-cycle-probe")
    decompositions = {}
    for i in range(q):
        outcome = peel(classes[i], k)
        if isinstance(outcome, ShortCycle):
            lvl.branch = "short-cycle"
            lvl.sizes["colour"] = i
            lvl.sizes["via"] = "peel"
            lvl.bound_claimed = 2 * k + 1
            return outcome.cycle.with_colour(i), 2 * k + 1
        decompositions[i] = outcome
    girths = [odd_girth(classes[i]) for i in range(q)]
    best = min_colour_odd_cycle(c, girths)
    assert best is not None  # every class is non-bipartite here
    if best[1] <= 2 * k + 1:
        i, length, cert = best
        lvl.branch = "short-cycle"
        lvl.sizes["colour"] = i
        lvl.sizes["via"] = "odd-girth"
        lvl.bound_claimed = 2 * k + 1
        return cert, 2 * k + 1

    # (4) every colour decomposed: pool the deleted sets
    lvl.steps.append("peel-all")
    removed = set()
    for i in range(q):
        removed.update(int(v) for v in decompositions[i].removed)
    lvl.sizes["removed_total"] = len(removed)
    if len(removed) > n / (2 * q):
        lvl.asserts_failed.append("removed-bound")

    # (5) split residual components at the small threshold
    lvl.steps.append("component-split")
    small_sets = {}
    big_sets = {}
    residual = {}
    for i in range(q):
        residual[i] = classes[i].without(removed)
        small, big = [], []
        for comp in components(residual[i]):
            (small if len(comp) <= threshold else big).append(comp)
        small_sets[i] = small
        big_sets[i] = big
    small_counts = {i: sum(len(s) for s in small_sets[i]) for i in range(q)}
    lvl.sizes["small_vertex_counts"] = [small_counts[i] for i in range(q)]

    # (6) a colour with few small-component vertices: shorten a seed cycle
    cutoff = n / q ** (1.0 - params.eps)
    for i in range(q):
        if small_counts[i] <= cutoff:
            comps = decompositions[i].components
            big_union = set()
            for comp in big_sets[i]:
                big_union.update(int(v) for v in comp)
            target_ids = [
                ci
                for ci, comp in enumerate(comps)
                if any(int(v) in big_union for v in comp.vertices)
            ]
            cert = shorten_cycle(
                classes[i],
                [(comp.vertices, comp.center) for comp in comps],
                target_ids,
                k,
                seeds[i].with_colour(i),
            )
            bound = len(removed) + small_counts[i] + (4 * k + 1) * len(target_ids)
            if cert.length > bound:
                raise InternalInconsistency(
                    f"shortened cycle of length {cert.length} exceeds its bound {bound}",
                    witness={"colour": i, "length": cert.length, "bound": bound},
                )
            lvl.branch = "lemma2-branch"
            lvl.sizes.update({"colour": i, "targets": len(target_ids)})
            lvl.bound_claimed = bound
            return cert, bound

    # (7) selector branch: every colour carries many small-component vertices
    lvl.branch = "selector-branch"
    survivors_all = sorted(set(range(n)) - removed)
    n_prime = len(survivors_all)
    lvl.sizes["n_prime"] = n_prime
    index_of = {v: idx for idx, v in enumerate(survivors_all)}
    pairs = []
    delta = None
    for i in range(q):
        bip = check_bipartite(residual[i])
        assert isinstance(bip, Bipartition)  # residual of a decomposed colour
        big_union = set()
        for comp in big_sets[i]:
            big_union.update(int(v) for v in comp)
        side_a = sorted(index_of[int(v)] for v in bip.side0 if int(v) in big_union)
        side_b = sorted(index_of[int(v)] for v in bip.side1 if int(v) in big_union)
        pairs.append((side_a, side_b))
        frac = 1.0 - (len(side_a) + len(side_b)) / n_prime if n_prime else 0.0
        delta = frac if delta is None else min(delta, frac)
    lvl.sizes["delta"] = delta
    if delta is None or delta <= 1.0 / q ** (1.0 - params.eps):
        lvl.asserts_failed.append("delta-bound")

    instance = SelectorInstance(n_prime, pairs)
    result = select_complement(instance, "derandomized")
    survivors = [survivors_all[idx] for idx in result.survivors]
    lvl.sizes["survivor_count"] = len(survivors)

    if len(survivors) > q * threshold:
        # Membership maps of small components per colour: a surviving pair
        # covered by no small component contradicts completeness.
        member = []
        for i in range(q):
            owner = {}
            for ci, comp in enumerate(small_sets[i]):
                for v in comp:
                    owner[int(v)] = ci
            member.append(owner)
        for x in survivors:
            shared = set()
            for i in range(q):
                own = member[i].get(x)
                if own is None:
                    continue
                shared.update(int(v) for v in small_sets[i][own])
            for y in survivors:
                if y == x or y in shared:
                    continue
                colour = int(c.table[x, y])
                raise InternalInconsistency(
                    f"surviving pair ({x},{y}) lies in no small component, yet its "
                    f"colour is {colour if colour >= 0 else 'missing'}; impossible "
                    "for a complete colouring",
                    witness={
                        "edge": (x, y),
                        "colour": colour if colour >= 0 else None,
                        "survivors": survivors,
                        "trace": lvl.to_record(),
                    },
                )
        lvl.asserts_failed.append("cover-pair")
    else:
        lvl.asserts_failed.append("survivor-count")

    if params.fallback == "oracle":
        lvl.fallback_used = True
        return _oracle_result(c, lvl, girths)
    raise PipelineAssertError(
        "selector branch asserts failed: " + ", ".join(lvl.asserts_failed),
        failed=lvl.asserts_failed,
    )


def reduce_bipartite_colour(c, i, bipartition):
    """Induced colouring on the larger side of a bipartite colour class, with
    colour i removed and the remaining colours relabelled densely.

    Returns (colouring, kept) where ``kept`` maps new vertex indices to the
    original ones. Ties go to side0.
    """
    if not 0 <= i < c.q:
        raise InputError(f"colour {i} out of range")
    s0 = np.asarray(bipartition.side0, dtype=np.int64)
    s1 = np.asarray(bipartition.side1, dtype=np.int64)
    both = np.concatenate([s0, s1])
    if len(np.unique(both)) != len(both) or len(both) != c.n:
        raise InputError("bipartition must partition the vertex set")
    for side in (s0, s1):
        if side.size:
            sub = c.table[np.ix_(side, side)]
            if (sub == i).any():
                raise InputError(f"bipartition invalid: colour-{i} edge inside one side")
    side = s0 if len(s0) >= len(s1) else s1
    kept = np.sort(side)
    sub = c.table[np.ix_(kept, kept)].copy()
    sub[sub > i] -= 1
    reduced = EdgeColouring(len(kept), c.q - 1, sub, provenance=f"reduce(drop {i})")
    return reduced, kept


def signatures(c, removed, bipartitions):
    """Per-vertex bit vector of bipartition sides over the colours.

    ``bipartitions[i]`` must be a valid bipartition of colour class i minus
    the removed set. Bit i of vertex v says which side v is on, with each
    component's side labels flipped so its lowest-index vertex reads 0.
    Returns {vertex: bitmask} over the surviving vertices.
    """
    removed_set = set(int(v) for v in removed)
    survivors = [v for v in range(c.n) if v not in removed_set]
    if len(bipartitions) != c.q:
        raise InputError(f"need one bipartition per colour, got {len(bipartitions)}")
    sig = {v: 0 for v in survivors}
    for i, bip in enumerate(bipartitions):
        g = colour_class(c, i).without(removed_set)
        s0 = set(int(v) for v in bip.side0)
        s1 = set(int(v) for v in bip.side1)
        if s0 & s1 or (s0 | s1) != set(survivors):
            raise InputError(f"bipartition {i} does not partition the survivors")
        matrix = g.masked_matrix()
        for side in (s0, s1):
            idx = sorted(side)
            if idx and matrix[np.ix_(idx, idx)].any():
                raise InputError(f"bipartition {i} has an edge inside one side")
        for comp in components(g):
            lowest = int(comp.min())
            flip = lowest in s1
            for v in comp:
                v = int(v)
                on_side1 = v in s1
                if on_side1 != flip:
                    sig[v] |= 1 << i
    return sig


def proposition_pipeline(c, delta, q=None):
    """Short monochromatic odd cycle in K_n for n >= ceil((1+delta) * 2^q).

    Peels each colour with k = ceil(2q(q+1)/delta) and returns the first parity
    conflict (length <= 2k+1). Should every peel decompose, the signature
    pigeonhole fires: the deleted set is too small for that, so a surviving
    signature collision exposes an uncoloured pair and raises
    InternalInconsistency (unreachable for genuine complete colourings).
    """
    if q is None:
        q = c.q
    if c.q > q:
        raise InputError(f"colouring uses {c.q} colours, more than the stated {q}")
    d = Fraction(delta)
    if not 0 < d <= 1:
        raise InputError(f"delta must lie in (0, 1], got {delta}")
    needed = math.ceil((1 + d) * 2**q)
    if c.n < needed:
        raise InputError(f"need n >= {needed} for q={q}, delta={delta}; got {c.n}")
    k = math.ceil(Fraction(2 * q * (q + 1), 1) / d)

    trace = PipelineTrace()
    lvl = LevelTrace(level=0, q=c.q, n=c.n)
    lvl.params = {"k": k, "delta": float(d)}
    trace.append(lvl)

    decompositions = {}
    for i in range(c.q):
        outcome = peel(colour_class(c, i), k)
        if isinstance(outcome, ShortCycle):
            lvl.branch = "short-cycle"
            lvl.sizes["colour"] = i
            lvl.bound_claimed = 2 * k + 1
            return MonoOddCycle(outcome.cycle.with_colour(i), 2 * k + 1, trace)
        decompositions[i] = outcome

    lvl.branch = "selector-branch"
    lvl.steps.append("signature-pigeonhole")
    removed = set()
    for i in range(c.q):
        removed.update(int(v) for v in decompositions[i].removed)
    lvl.sizes["removed_total"] = len(removed)
    bips = []
    for i in range(c.q):
        bip = check_bipartite(colour_class(c, i).without(removed))
        assert isinstance(bip, Bipartition)
        bips.append(bip)
    sig = signatures(c, removed, bips)
    lvl.sizes["survivor_count"] = len(sig)
    seen = {}
    for v, s in sorted(sig.items()):
        if s in seen:
            x, y = seen[s], v
            colour = int(c.table[x, y])
            raise InternalInconsistency(
                f"vertices {x} and {y} share signature {s:0{c.q}b} yet their pair "
                f"carries colour {colour if colour >= 0 else 'missing'}; impossible "
                "for a complete colouring",
                witness={"edge": (x, y), "colour": colour if colour >= 0 else None,
                         "signature": s, "trace": lvl.to_record()},
            )
        seen[s] = v
    raise PipelineAssertError(
        f"signature pigeonhole failed: only {len(sig)} survivors over "
        f"{2 ** c.q} signatures (deleted set too large at this scale)",
        failed=["signature-pigeonhole"],
    )

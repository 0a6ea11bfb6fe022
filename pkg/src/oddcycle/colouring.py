"""q-edge-colourings of complete graphs: construction, storage and I/O.

The table is kept as a full symmetric integer matrix with -1 on the diagonal;
-1 off the diagonal marks an uncoloured pair and is only legal when the
colouring is built with ``validate=False`` (used to craft deliberately
corrupted inputs for the pipeline's self-check tests).

File format (text, bit-exact):
    line 1:        ``oddcycle-colouring v1``
    line 2:        ``<n> <q>``
    lines 3..n+1:  line for u = 0..n-2 holds the colours of {u,u+1}..{u,n-1},
                   space-separated decimal integers.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InputError, ParseError
from .graph import Graph

FORMAT_MAGIC = "oddcycle-colouring v1"


@dataclass(frozen=True)
class ColouringHeader:
    version: str
    n: int
    q: int
    provenance: str | None = None


class EdgeColouring:
    """Assignment of a colour in [0,q) to every pair {u,v} of K_n."""

    def __init__(self, n, q, table, provenance=None, validate=True):
        if n < 1:
            raise InputError("colouring needs at least one vertex")
        if q < 0:
            raise InputError("colour count must be >= 0")
        tab = np.array(table, dtype=np.int16)
        if tab.shape != (n, n):
            raise InputError(f"table shape {tab.shape} does not match n={n}")
        if not np.array_equal(tab, tab.T):
            raise InputError("colour table must be symmetric")
        if (tab.diagonal() != -1).any():
            raise InputError("table diagonal must be -1")
        off = tab[~np.eye(n, dtype=bool)]
        if validate:
            if off.size and (off.min() < 0 or off.max() >= q):
                raise InputError("every pair must carry a colour in [0, q)")
        else:
            if off.size and (off.min() < -1 or off.max() >= q):
                raise InputError("colours out of range")
        self.n = n
        self.q = q
        self.table = tab
        self.table.setflags(write=False)
        self.provenance = provenance

    def colour_of(self, u, v):
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"({u},{v}) is not a vertex pair")
        return int(self.table[u, v])

    @property
    def header(self):
        return ColouringHeader(FORMAT_MAGIC, self.n, self.q, self.provenance)

    def is_complete(self):
        off = self.table[~np.eye(self.n, dtype=bool)]
        return bool(off.size == 0 or off.min() >= 0)

    def __eq__(self, other):
        return (
            isinstance(other, EdgeColouring)
            and self.n == other.n
            and self.q == other.q
            and np.array_equal(self.table, other.table)
        )

    def __repr__(self):
        return f"EdgeColouring(n={self.n}, q={self.q})"


def binary_colouring(q):
    """All-bipartite colouring of K_{2^q}: the pair {u,v} gets the index of
    the lowest bit where u and v differ, so colour class i is complete
    bipartite between the bit-i=0 and bit-i=1 vertices.

    Tables are dense (n^2 entries, n = 2^q); sizes beyond q ~ 14 will not fit
    in memory even though the guard admits q <= 30.
    """
    if not 1 <= q <= 30:
        raise InputError(f"q must be in [1, 30], got {q}")
    n = 1 << q
    ids = np.arange(n, dtype=np.int64)
    table = np.full((n, n), -1, dtype=np.int16)
    block = max(1, (1 << 22) // n)  # bound the XOR intermediates, n=2^13 is fine
    for start in range(0, n, block):
        diff = ids[start : start + block, None] ^ ids[None, :]
        low = diff & -diff
        rows = np.full(diff.shape, -1, dtype=np.int16)
        off = diff != 0
        rows[off] = np.log2(low[off]).astype(np.int16)
        table[start : start + block] = rows
    return EdgeColouring(n, q, table, provenance=f"binary q={q}")


def product_colouring(c1, c2):
    """Colouring of K_{n1*n2} on vertex pairs (a,b). Pairs with a != a' take
    c1's colour on {a,a'}; pairs with a == a' take q1 + c2's colour on {b,b'}."""
    n1, n2 = c1.n, c2.n
    n = n1 * n2
    a = np.repeat(np.arange(n1), n2)
    b = np.tile(np.arange(n2), n1)
    t1 = c1.table[np.ix_(a, a)].astype(np.int32)
    t2 = c2.table[np.ix_(b, b)].astype(np.int32)
    same_a = a[:, None] == a[None, :]
    lifted = np.where(t2 >= 0, c1.q + t2, -1)
    table = np.where(same_a, lifted, t1).astype(np.int16)
    return EdgeColouring(
        n,
        c1.q + c2.q,
        table,
        provenance=f"product({c1.provenance or 'c1'}, {c2.provenance or 'c2'})",
        validate=c1.is_complete() and c2.is_complete(),
    )


def random_colouring(n, q, seed):
    """Uniform independent colour per pair from a deterministic seeded stream."""
    if n < 2:
        raise InputError("random colouring needs n >= 2")
    if q < 1:
        raise InputError("random colouring needs q >= 1")
    rng = np.random.default_rng(seed)
    table = np.full((n, n), -1, dtype=np.int16)
    iu = np.triu_indices(n, 1)
    table[iu] = rng.integers(0, q, size=iu[0].size, dtype=np.int16)
    table.T[iu] = table[iu]
    return EdgeColouring(n, q, table, provenance=f"random n={n} q={q} seed={seed}")


def colouring_from_classes(n, classes, validate=True):
    """Build a colouring from explicit per-colour edge lists (q = len(classes)).

    Pairs not listed anywhere stay uncoloured (-1), which is rejected unless
    ``validate=False``; that switch exists to craft corrupted instances.
    """
    table = np.full((n, n), -1, dtype=np.int16)
    for colour, edges in enumerate(classes):
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InputError(f"bad pair ({u},{v})")
            if table[u, v] != -1:
                raise InputError(f"pair ({u},{v}) coloured twice")
            table[u, v] = table[v, u] = colour
    return EdgeColouring(n, len(classes), table, validate=validate)


def colour_class(c, i):
    """Graph on all n vertices whose edges are exactly the colour-i pairs."""
    if not 0 <= i < c.q:
        raise InputError(f"colour {i} out of range [0, {c.q})")
    return Graph(c.table == i)


def write_colouring(c, stream):
    """Write the exact text format; accepts a path or a text stream."""
    if isinstance(stream, (str, Path)):
        with open(stream, "w") as fh:
            write_colouring(c, fh)
        return
    stream.write(f"{FORMAT_MAGIC}\n")
    stream.write(f"{c.n} {c.q}\n")
    for u in range(c.n - 1):
        stream.write(" ".join(str(int(x)) for x in c.table[u, u + 1 :]))
        stream.write("\n")


def colouring_to_text(c):
    buf = io.StringIO()
    write_colouring(c, buf)
    return buf.getvalue()


def read_colouring(stream):
    """Parse the text format; raises ParseError with a line number on damage."""
    if isinstance(stream, (str, Path)):
        with open(stream, "r") as fh:
            return read_colouring(fh)
    lines = stream.read().split("\n")
    if not lines or lines[0] != FORMAT_MAGIC:
        raise ParseError(f"expected header {FORMAT_MAGIC!r}", line=1)
    if len(lines) < 2:
        raise ParseError("missing dimension line", line=2)
    parts = lines[1].split()
    if len(parts) != 2:
        raise ParseError("dimension line must be '<n> <q>'", line=2)
    try:
        n, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("dimensions must be integers", line=2) from None
    if n < 1 or q < 0:
        raise ParseError(f"bad dimensions n={n} q={q}", line=2)
    table = np.full((n, n), -1, dtype=np.int16)
    for u in range(n - 1):
        lineno = 3 + u
        if lineno - 1 >= len(lines):
            raise ParseError(f"truncated table: missing row for vertex {u}", line=lineno)
        row = lines[lineno - 1].split()
        expected = n - 1 - u
        if len(row) != expected:
            raise ParseError(
                f"row for vertex {u} has {len(row)} entries, expected {expected}",
                line=lineno,
            )
        for off, tok in enumerate(row):
            try:
                val = int(tok)
            except ValueError:
                raise ParseError(f"non-integer colour {tok!r}", line=lineno) from None
            if not 0 <= val < q:
                raise ParseError(f"colour {val} out of range [0, {q})", line=lineno)
            v = u + 1 + off
            table[u, v] = table[v, u] = val
    for idx, extra in enumerate(lines[n + 1 :]):
        if extra.strip():
            raise ParseError("unexpected trailing content", line=n + 2 + idx)
    return EdgeColouring(n, q, table)

"""Dense temporal matrices and vectors.

A :class:`TemporalMatrix` stores an ``n x m`` grid of temporal quantities
together with the semiring its values live in.  Temporal vectors are plain
lists of quantities; functions that combine them take the semiring
explicitly.  Node indices are 0-based here.
"""

from dataclasses import dataclass, field

from .errors import DimensionError, UnsupportedClosureError
from .semiring import COMBINATORIAL, REACHABILITY, Semiring
from .tq import (
    TimeHorizon,
    activity_bounds,
    tq_binary,
    tq_extract,
    tq_invert,
    tq_map,
    tq_prod,
    tq_sum,
    unit,
)


@dataclass
class TemporalMatrix:
    entries: list
    spec: Semiring = COMBINATORIAL
    horizon: TimeHorizon = None
    labels: tuple = field(default=None)

    @classmethod
    def empty(cls, n, spec=COMBINATORIAL, m=None, horizon=None, labels=None):
        m = n if m is None else m
        return cls([[[] for _ in range(m)] for _ in range(n)], spec, horizon, labels)

    @classmethod
    def from_arcs(cls, n, arcs, spec=COMBINATORIAL, horizon=None, labels=None):
        """Build from ``{(u, v): quantity}`` with 0-based node indices."""
        A = cls.empty(n, spec, horizon=horizon, labels=labels)
        for (u, v), a in arcs.items():
            A.entries[u][v] = tq_sum(spec, A.entries[u][v], list(a))
        return A

    @property
    def shape(self):
        return len(self.entries), (len(self.entries[0]) if self.entries else 0)

    @property
    def n(self):
        rows, cols = self.shape
        if rows != cols:
            raise DimensionError(f"matrix is {rows}x{cols}, not square")
        return rows

    def __getitem__(self, uv):
        u, v = uv
        return self.entries[u][v]

    def like(self, entries, spec=None):
        """A matrix sharing this one's metadata but with new entries."""
        return TemporalMatrix(entries, self.spec if spec is None else spec, self.horizon, self.labels)

    def transpose(self):
        rows, cols = self.shape
        return self.like([[self.entries[u][v] for u in range(rows)] for v in range(cols)])

    def map(self, fn, spec=None):
        spec = self.spec if spec is None else spec
        return self.like([[tq_map(a, fn, spec) for a in row] for row in self.entries], spec)

    def start(self):
        """Earliest time that matters for unit quantities built from this matrix."""
        if self.horizon is not None:
            return min(0, self.horizon.t_min)
        lo, _ = activity_bounds(a for row in self.entries for a in row)
        return 0 if lo == float("inf") else min(0, lo)

    def time_window(self):
        """``(start, finish)`` of the horizon, or of the entries when no horizon is set."""
        if self.horizon is not None:
            return self.horizon.t_min, self.horizon.t_max
        return activity_bounds(a for row in self.entries for a in row)

    def nonempty(self):
        for u, row in enumerate(self.entries):
            for v, a in enumerate(row):
                if a:
                    yield u, v, a


def _same_spec(A, B):
    if A.spec != B.spec:
        raise DimensionError(f"semiring mismatch: {A.spec.name} vs {B.spec.name}")


def mat_sum(A, B):
    _same_spec(A, B)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    spec = A.spec
    return A.like([[tq_sum(spec, a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.entries, B.entries)])


def mat_vec_mul(A, v, side="right"):
    """``A . v`` (``side='right'``) or ``v . A`` (``side='left'``)."""
    spec = A.spec
    rows, cols = A.shape
    if side == "right":
        if len(v) != cols:
            raise DimensionError(f"vector of length {len(v)} for {rows}x{cols} matrix")
        out = []
        for row in A.entries:
            acc = []
            for a, x in zip(row, v):
                if a and x:
                    acc = tq_sum(spec, acc, tq_prod(spec, a, x))
            out.append(acc)
        return out
    if side == "left":
        if len(v) != rows:
            raise DimensionError(f"vector of length {len(v)} for {rows}x{cols} matrix")
        out = []
        for j in range(cols):
            acc = []
            for i in range(rows):
                a = A.entries[i][j]
                if a and v[i]:
                    acc = tq_sum(spec, acc, tq_prod(spec, v[i], a))
            out.append(acc)
        return out
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def mat_prod(A, B):
    _same_spec(A, B)
    n, k = A.shape
    k2, m = B.shape
    if k != k2:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    spec = A.spec
    out = []
    for i in range(n):
        row_a = A.entries[i]
        row = []
        for j in range(m):
            acc = []
            for t in range(k):
                a = row_a[t]
                if a:
                    b = B.entries[t][j]
                    if b:
                        acc = tq_sum(spec, acc, tq_prod(spec, a, b))
            row.append(acc)
        out.append(row)
    return TemporalMatrix(out, spec, A.horizon or B.horizon, A.labels if n == m else None)


def mat_prod_diag(A, B):
    """Diagonal of ``A . B`` without computing the other entries."""
    _same_spec(A, B)
    n, k = A.shape
    if B.shape != (k, n):
        raise DimensionError(f"diagonal of {A.shape} x {B.shape} is undefined")
    spec = A.spec
    out = []
    for i in range(n):
        acc = []
        for t in range(k):
            a = A.entries[i][t]
            if a:
                b = B.entries[t][i]
                if b:
                    acc = tq_sum(spec, acc, tq_prod(spec, a, b))
        out.append(acc)
    return out


def mat_power(A, k):
    """``A**k`` by repeated squaring."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"power must be a positive integer, got {k!r}")
    result = None
    base = A
    while True:
        if k & 1:
            result = base if result is None else mat_prod(result, base)
        k >>= 1
        if not k:
            return result
        base = mat_prod(base, base)


def mat_closure(A, strict=False):
    """Closure over an absorptive semiring by in-place Fletcher elimination.

    With ``strict`` the result sums all nonempty walks; otherwise the empty
    walk contributes the semiring one on the diagonal.
    """
    spec = A.spec
    if not spec.absorptive:
        raise UnsupportedClosureError(f"closure needs an absorptive semiring, not {spec.kind}")
    n = A.n
    C = [list(row) for row in A.entries]
    one = unit(spec, A.start())
    for k in range(n):
        row_k = C[k]
        for u in range(n):
            cuk = C[u][k]
            if not cuk:
                continue
            row_u = C[u]
            for v in range(n):
                ckv = row_k[v]
                if ckv:
                    row_u[v] = tq_sum(spec, row_u[v], tq_prod(spec, cuk, ckv))
        if not strict:
            C[k][k] = tq_sum(spec, one, C[k][k])
    return A.like(C)


def mat_binary(A, spec=None):
    """Replace every value by the one of ``spec`` (default: the matrix's own)."""
    spec = A.spec if spec is None else spec
    return A.like([[tq_binary(a, spec.one) for a in row] for row in A.entries], spec)


def mat_symmetrize(A):
    return mat_sum(A, A.transpose())


def mat_set_diag(A, c):
    n = A.n
    entries = [list(row) for row in A.entries]
    for i in range(n):
        entries[i][i] = list(c)
    return A.like(entries)


def mat_intersect(A, B):
    """Entrywise intersection of activity; values become the semiring one."""
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    one = A.spec.one
    entries = []
    for ra, rb in zip(A.entries, B.entries):
        entries.append(
            [tq_binary(tq_prod(REACHABILITY, tq_binary(a, True), tq_binary(b, True)), one) for a, b in zip(ra, rb)]
        )
    return A.like(entries)


def mat_extract(q, A):
    """Keep each link only while both of its end nodes are active in ``q``."""
    n = A.n
    if len(q) != n:
        raise DimensionError(f"partition of length {len(q)} for {n} nodes")
    mask = [tq_binary(p, True) for p in q]
    entries = []
    for u in range(n):
        row = []
        for v in range(n):
            a = A.entries[u][v]
            if a:
                a = tq_extract(tq_prod(REACHABILITY, mask[u], mask[v]), a)
            row.append(a)
        entries.append(row)
    return A.like(entries)


def vec_const(n, v):
    return [list(v) for _ in range(n)]


def _same_len(a, b):
    if len(a) != len(b):
        raise DimensionError(f"vector lengths differ: {len(a)} vs {len(b)}")


def vec_sum(spec, a, b):
    _same_len(a, b)
    return [tq_sum(spec, x, y) for x, y in zip(a, b)]


def vec_prod(spec, a, b):
    _same_len(a, b)
    return [tq_prod(spec, x, y) for x, y in zip(a, b)]


def vec_inv(a):
    return [tq_invert(x) for x in a]


def min_time(A):
    """Smallest node activity consistent with the links of ``A``.

    Each node is active exactly when at least one incident link is.
    """
    n = A.n
    out = []
    for u in range(n):
        acc = []
        for v in range(n):
            for a in (A.entries[u][v], A.entries[v][u]):
                if a:
                    acc = tq_sum(REACHABILITY, acc, tq_binary(a, True))
        out.append(tq_binary(acc, 1))
    return out

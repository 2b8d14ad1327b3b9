"""Degrees, group activity, clustering coefficients and attraction."""

from ..errors import InvalidInputError
from ..semiring import COMBINATORIAL, MAXMIN
from ..tmatrix import (
    mat_binary,
    mat_prod,
    mat_prod_diag,
    mat_set_diag,
    mat_symmetrize,
    mat_vec_mul,
    vec_const,
    vec_inv,
    vec_prod,
    vec_sum,
)
from ..tq import FOREVER, tq_fill_gaps, tq_invert, tq_prod, tq_sum, unit


def as_combinatorial(A):
    """``A`` over the combinatorial semiring; boolean matrices become 0/1 counts."""
    if A.spec.kind == "combinatorial":
        return A
    if A.spec.kind == "reachability":
        return mat_binary(A, COMBINATORIAL)
    raise InvalidInputError(f"expected a combinatorial matrix, got {A.spec.name}")


def degrees(A, direction="out"):
    """Temporal in- or out-degrees (weighted by the link values)."""
    A = as_combinatorial(A)
    e = vec_const(A.n, unit(COMBINATORIAL, A.start()))
    if direction == "out":
        return mat_vec_mul(A, e, "right")
    if direction == "in":
        return mat_vec_mul(A, e, "left")
    raise ValueError(f"direction must be 'in' or 'out', not {direction!r}")


def activity(A, V1, V2):
    """Total activity of node group ``V1`` on node group ``V2``."""
    A = as_combinatorial(A)
    acc = []
    for u in V1:
        for v in V2:
            a = A.entries[u][v]
            if a:
                acc = tq_sum(COMBINATORIAL, acc, a)
    return acc


def skeleton_degrees(A):
    """Loop-free binary matrix ``B``, its binary symmetrization ``S`` and the degrees in ``S``."""
    B = mat_set_diag(mat_binary(A, COMBINATORIAL), [])
    S = mat_binary(mat_symmetrize(B))
    deg = mat_vec_mul(S, vec_const(A.n, unit(COMBINATORIAL, A.start())))
    return B, S, deg


def max_degree(deg):
    """Temporal maximum of a degree vector (maxmin summation)."""
    delta = []
    for d in deg:
        delta = tq_sum(MAXMIN, delta, d)
    return delta


def clus_coef(A, type=1):
    """Temporal clustering coefficients.

    ``type`` 1 is the standard coefficient, 2 the corrected coefficient with
    the maximum degree taken per instant and 3 the corrected coefficient with
    the overall maximum degree.  A coefficient of 0 is returned as an empty
    quantity.
    """
    if type not in (1, 2, 3):
        raise ValueError(f"clustering coefficient type must be 1, 2 or 3, got {type!r}")
    C = COMBINATORIAL
    n = A.n
    start = A.start()
    ve = vec_const(n, [(start, FOREVER, -1)])
    B, S, deg = skeleton_degrees(A)
    if type == 1:
        fac = vec_prod(C, deg, vec_sum(C, deg, ve))
    else:
        delta = max_degree(deg)
        if type == 3:
            if not delta:
                return [[] for _ in range(n)]
            delta = [(start, FOREVER, max(v for _, _, v in delta))]
        degm = vec_sum(C, deg, ve)
        fac = [tq_prod(C, delta, d) for d in degm]
    tri = mat_prod_diag(mat_prod(S, B), S)
    # fac is 0 only where deg = 1, and there tri is undefined anyway
    fac = [[t for t in f if t[2] != 0] for f in fac]
    return vec_prod(C, vec_inv(fac), tri)


def attraction(A):
    """Temporal attraction coefficients, bounded by [0, 1]."""
    A = as_combinatorial(A)
    n = A.n
    for u, v, a in A.nonempty():
        for _, _, x in a:
            if not x > 0:
                raise InvalidInputError(f"attraction needs positive values, link {u + 1}->{v + 1} has {x!r}")
    _, _, deg = skeleton_degrees(A)
    delta = max_degree(deg)
    if not delta:
        return [[] for _ in range(n)]
    big = max(v for _, _, v in delta)
    s, f = A.time_window()
    C = COMBINATORIAL
    inv = []
    for v in range(n):
        act = []
        for w in range(n):
            if w != v and A.entries[v][w]:
                act = tq_sum(C, act, A.entries[v][w])
        inv.append(tq_invert(tq_fill_gaps(act, s, f)) if act else [])
    out = []
    for u in range(n):
        acc = []
        for v in range(n):
            a = A.entries[v][u]
            if v != u and a:
                acc = tq_sum(C, acc, tq_prod(C, a, inv[v]))
        out.append([(s_, f_, x / big) for s_, f_, x in acc])
    return out

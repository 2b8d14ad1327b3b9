"""Temporal closeness and betweenness."""

from ..errors import InvalidInputError
from ..semiring import COMBINATORIAL, GEODETIC, SHORTEST_PATH
from ..tmatrix import mat_closure
from ..tq import FOREVER, append_triple, overlay, tq_fill_gaps, tq_invert, tq_prod, tq_sum


def _as_weights(A, spec):
    """Copy of ``A`` over ``spec`` keeping the numeric link values (booleans count as 1)."""

    def conv(v):
        if isinstance(v, bool):
            return 1
        if isinstance(v, (int, float)) and v >= 0:
            return v
        raise InvalidInputError(f"link values must be nonnegative numbers, got {v!r}")

    return A.map(conv, spec)


def distances(A):
    """Strict shortest-path closure of ``A``."""
    return mat_closure(_as_weights(A, SHORTEST_PATH), strict=True)


def closeness(A, type=2):
    """Temporal closeness: 1 output, 2 all (both directions), 3 input.

    Where some node is unreachable the distance is infinite and the
    closeness is 0.
    """
    if type not in (1, 2, 3):
        raise ValueError(f"closeness type must be 1, 2 or 3, got {type!r}")
    n = A.n
    s, f = A.time_window()
    D = distances(A).entries
    k = (2 - abs(type - 2)) * (n - 1)
    fac = [(A.start(), FOREVER, k)]
    C = COMBINATORIAL
    cl = []
    for v in range(n):
        d = []
        for u in range(n):
            if u == v:
                continue
            if type < 3:
                d = tq_sum(C, d, tq_fill_gaps(D[v][u], s, f))
            if type > 1:
                d = tq_sum(C, d, tq_fill_gaps(D[u][v], s, f))
        cl.append(tq_prod(C, fac, tq_invert(d)))
    return cl


def geodesics(A):
    """Strict closure over the geodetic semiring: ``(length, count)`` of geodesics."""
    return mat_closure(A.map(lambda _: (1, 1), GEODETIC), strict=True)


def between(uv, vw, uw):
    """Share of ``u``-``w`` geodesics passing through ``v``, wherever it is positive."""
    c = []
    for s, f, ((d1, n1), (d2, n2), (d3, n3)) in overlay(uv, vw, uw):
        if d1 + d2 == d3:
            append_triple(c, s, f, n1 * n2 / n3)
    return c


def betweenness(A):
    """Temporal betweenness, normalized by ``(n - 1)(n - 2)``."""
    n = A.n
    if n < 3:
        return [[] for _ in range(n)]
    G = geodesics(A).entries
    C = COMBINATORIAL
    norm = (n - 1) * (n - 2)
    out = []
    for v in range(n):
        acc = []
        for u in range(n):
            uv = G[u][v]
            if u == v or not uv:
                continue
            for w in range(n):
                if w == v or w == u:
                    continue
                vw, uw = G[v][w], G[u][w]
                if vw and uw:
                    acc = tq_sum(C, acc, between(uv, vw, uw))
        out.append([(s, f, x / norm) for s, f, x in acc])
    return out

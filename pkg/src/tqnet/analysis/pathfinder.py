"""Temporal Pathfinder skeletons."""

import math

from ..errors import InvalidInputError
from ..semiring import INF, pathfinder
from ..tmatrix import mat_closure, mat_power, mat_set_diag
from ..tq import append_triple, unit

TOLERANCE = 1e-9


def _same(x, y):
    return math.isclose(x, y, rel_tol=TOLERANCE, abs_tol=TOLERANCE)


def pf_check(a, b):
    """Triples of ``a`` on the stretches where ``b`` has the same value."""
    if not a or not b:
        return list(a)
    c = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        sa, fa, va = a[ia]
        sb, fb, vb = b[ib]
        if fa <= sb:
            ia += 1
        elif fb <= sa:
            ib += 1
        else:
            s, f = max(sa, sb), min(fa, fb)
            if _same(va, vb):
                append_triple(c, s, f, va)
            if f == fa:
                ia += 1
            if f == fb:
                ib += 1
    return c


def walk_values(W, r=1, q=INF):
    """Best r-norm value over walks of length at most ``q``."""
    spec = pathfinder(r, q)

    def conv(v):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not v >= 0:
            raise InvalidInputError(f"Pathfinder needs nonnegative dissimilarities, got {v!r}")
        return v

    Wp = W.map(conv, spec)
    if q > W.n:
        return mat_closure(Wp)
    return mat_power(mat_set_diag(Wp, unit(spec, Wp.start())), int(q))


def path_finder(W, r=1, q=INF):
    """Pathfinder skeleton of a dissimilarity matrix.

    A link is kept, on each stretch of time, exactly where no walk of at most
    ``q`` links has a smaller r-norm value than the link itself.
    """
    Z = walk_values(W, r, q).entries
    n = W.n
    return W.like([[pf_check(W.entries[u][v], Z[u][v]) for v in range(n)] for u in range(n)])

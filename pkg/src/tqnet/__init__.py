"""Temporal network analysis with temporal quantities.

Values that change through time are lists of ``(start, finish, value)``
triples over one of six semirings; network measures are computed on these
lists directly instead of on per-instant snapshots.
"""

from .errors import (
    ConsistencyError,
    DimensionError,
    InputError,
    InvalidInputError,
    InvalidValueError,
    MalformedQuantityError,
    ParseError,
    TQError,
    UnsupportedClosureError,
    UnsupportedOperationError,
)
from .semiring import (
    COMBINATORIAL,
    GEODETIC,
    INF,
    MAXMIN,
    REACHABILITY,
    SHORTEST_PATH,
    Semiring,
    get_semiring,
    pathfinder,
    s_add,
    s_mul,
    s_star,
)
from .tmatrix import (
    TemporalMatrix,
    mat_binary,
    mat_closure,
    mat_extract,
    mat_intersect,
    mat_power,
    mat_prod,
    mat_prod_diag,
    mat_set_diag,
    mat_sum,
    mat_symmetrize,
    mat_vec_mul,
    min_time,
    vec_const,
    vec_inv,
    vec_prod,
    vec_sum,
)
from .tq import (
    FOREVER,
    TimeHorizon,
    render,
    standardize,
    tq_binary,
    tq_extract,
    tq_fill_gaps,
    tq_invert,
    tq_prod,
    tq_sum,
    tq_total,
    unit,
    value_at,
)

__version__ = "0.1.0"

"""Temporal quantities and their merge-scan arithmetic.

A temporal quantity is a list of ``(s, f, v)`` triples, sorted by start
time, with half-open intervals ``[s, f)`` that do not overlap.  Instants not
covered by any triple are undefined.  Lists are treated as immutable: no
function here modifies its arguments.

Times are integers; :data:`FOREVER` is an open-ended finish that compares
greater than every finite time.
"""

import math
from dataclasses import dataclass

from .errors import InvalidValueError, MalformedQuantityError, UnsupportedOperationError
from .semiring import INF

FOREVER = math.inf

_NOTHING = object()


@dataclass(frozen=True)
class TimeHorizon:
    """The half-open observation window ``[t_min, t_max)``."""

    t_min: int
    t_max: int

    def __post_init__(self):
        if not self.t_min < self.t_max:
            raise ValueError(f"empty horizon [{self.t_min}, {self.t_max})")

    def __contains__(self, t):
        return self.t_min <= t < self.t_max

    def instants(self):
        return range(self.t_min, self.t_max)


def _zero_of(spec):
    # zero-valued triples carry no information in absorptive semirings
    if spec is not None and spec.absorptive:
        return spec.zero
    return _NOTHING


def _push(c, s, f, v, drop):
    if v == drop and drop is not _NOTHING:
        return
    if c:
        ps, pf, pv = c[-1]
        if pf == s and pv == v:
            c[-1] = (ps, f, v)
            return
    c.append((s, f, v))


def append_triple(c, s, f, v):
    """Append to a standard-form list, extending the last triple when possible."""
    _push(c, s, f, v, _NOTHING)


def standardize(a, spec=None):
    """Join adjacent triples with equal values.

    With an absorptive ``spec`` triples carrying the semiring zero are
    dropped as well.  Raises :class:`MalformedQuantityError` on unsorted,
    overlapping or empty intervals.
    """
    drop = _zero_of(spec)
    c = []
    last = -INF
    for s, f, v in a:
        if not s < f:
            raise MalformedQuantityError(f"empty interval [{s}, {f})")
        if s < last:
            raise MalformedQuantityError(f"triple ({s}, {f}, {v!r}) overlaps or precedes [.., {last})")
        last = f
        _push(c, s, f, v, drop)
    return c


def tq_sum(spec, a, b):
    """Pointwise semiring sum; defined on the union of both activity sets."""
    if not a:
        return list(b)
    if not b:
        return list(a)
    add = spec.add
    drop = _zero_of(spec)
    sentinel = (INF, INF, spec.zero)
    c = []
    la, lb = len(a), len(b)
    ia, ib = 1, 1
    sa, fa, va = a[0]
    sb, fb, vb = b[0]
    while sa < INF or sb < INF:
        if sa < sb:
            sc, vc = sa, va
            if sb < fa:
                fc = sb
                sa = sb
            else:
                fc = fa
                sa, fa, va = a[ia] if ia < la else sentinel
                ia += 1
        elif sa == sb:
            sc = sa
            fc = fa if fa < fb else fb
            vc = add(va, vb)
            sa = sb = fc
            fd = fa
            if fd <= fb:
                sa, fa, va = a[ia] if ia < la else sentinel
                ia += 1
            if fb <= fd:
                sb, fb, vb = b[ib] if ib < lb else sentinel
                ib += 1
        else:
            sc, vc = sb, vb
            if sa < fb:
                fc = sa
                sb = sa
            else:
                fc = fb
                sb, fb, vb = b[ib] if ib < lb else sentinel
                ib += 1
        _push(c, sc, fc, vc, drop)
    return c


def tq_prod(spec, a, b):
    """Pointwise semiring product; defined on the intersection of both activity sets."""
    if not a or not b:
        return []
    mul = spec.mul
    drop = _zero_of(spec)
    sentinel = (INF, INF, spec.zero)
    c = []
    la, lb = len(a), len(b)
    ia, ib = 1, 1
    sa, fa, va = a[0]
    sb, fb, vb = b[0]
    while sa < INF or sb < INF:
        if fa <= sb:
            sa, fa, va = a[ia] if ia < la else sentinel
            ia += 1
        elif fb <= sa:
            sb, fb, vb = b[ib] if ib < lb else sentinel
            ib += 1
        else:
            sc = sa if sa > sb else sb
            fc = fa if fa < fb else fb
            _push(c, sc, fc, mul(va, vb), drop)
            if fc == fa:
                sa, fa, va = a[ia] if ia < la else sentinel
                ia += 1
            if fc == fb:
                sb, fb, vb = b[ib] if ib < lb else sentinel
                ib += 1
    return c


def overlay(*qs):
    """Yield ``(s, f, values)`` for every maximal piece where all ``qs`` are defined."""
    if not qs or any(not q for q in qs):
        return
    k = len(qs)
    idx = [0] * k
    while True:
        s = max(q[i][0] for q, i in zip(qs, idx))
        f = min(q[i][1] for q, i in zip(qs, idx))
        if s < f:
            yield s, f, tuple(q[i][2] for q, i in zip(qs, idx))
        # advance every list whose current triple ends first
        for j in range(k):
            if qs[j][idx[j]][1] == f or qs[j][idx[j]][1] <= s:
                idx[j] += 1
                if idx[j] == len(qs[j]):
                    return


def tq_total(a):
    """Duration-weighted sum of a numeric quantity."""
    total = 0
    for s, f, v in a:
        if isinstance(v, (bool, tuple)) or not isinstance(v, (int, float)):
            raise UnsupportedOperationError(f"cannot aggregate non-numeric value {v!r}")
        if f == FOREVER:
            raise UnsupportedOperationError("cannot aggregate an unbounded interval")
        total += (f - s) * v
    return total


def tq_binary(a, one=1):
    c = []
    for s, f, _ in a:
        _push(c, s, f, one, _NOTHING)
    return c


def tq_map(a, fn, spec=None):
    """Apply ``fn`` to every value and re-standardize."""
    drop = _zero_of(spec)
    c = []
    for s, f, v in a:
        _push(c, s, f, fn(v), drop)
    return c


def tq_invert(a):
    """Reciprocal of every value; ``1/inf`` is 0."""
    c = []
    for s, f, v in a:
        if v == 0:
            raise ZeroDivisionError(f"cannot invert zero on [{s}, {f})")
        _push(c, s, f, 0.0 if v == INF else 1 / v, _NOTHING)
    return c


def tq_fill_gaps(a, s, f, fill=INF):
    """Restrict ``a`` to ``[s, f)`` and fill every undefined stretch with ``fill``."""
    c = []
    t = s
    for si, fi, v in a:
        if fi <= s:
            continue
        if si >= f:
            break
        si, fi = max(si, s), min(fi, f)
        if t < si:
            _push(c, t, si, fill, _NOTHING)
        _push(c, si, fi, v, _NOTHING)
        t = fi
    if t < f:
        _push(c, t, f, fill, _NOTHING)
    return c


def tq_extract(p, a):
    """``a`` restricted to the activity set of ``p``."""
    c = []
    for s, f, (_, v) in overlay(p, a):
        _push(c, s, f, v, _NOTHING)
    return c


def tq_restrict(a, s, f):
    return tq_extract([(s, f, 1)], a)


def unit(spec, start=0):
    """The quantity equal to the semiring one from ``start`` onwards."""
    return [(start, FOREVER, spec.one)]


def value_at(a, t, default=None):
    """Value of ``a`` at instant ``t`` or ``default`` where undefined."""
    i = _locate(a, t)
    if i is None:
        return default
    return a[i][2]


def _locate(a, t):
    lo, hi = 0, len(a)
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid][0] <= t:
            lo = mid + 1
        else:
            hi = mid
    i = lo - 1
    if i >= 0 and a[i][0] <= t < a[i][1]:
        return i
    return None


def activity_bounds(qs):
    """Smallest start and largest finish over a collection of quantities."""
    lo, hi = INF, -INF
    for q in qs:
        if q:
            lo = min(lo, q[0][0])
            hi = max(hi, q[-1][1])
    return lo, hi


def validate(spec, a):
    for _, _, v in a:
        if not spec.contains(v):
            raise InvalidValueError(f"{v!r} is not a {spec.kind} value")
    return a


def _fmt_value(v):
    if isinstance(v, tuple):
        return "(" + ", ".join(_fmt_value(x) for x in v) + ")"
    return repr(v)


def render(a):
    """Canonical text form ``[(s, f, v), ...]``."""
    return "[" + ", ".join(f"({_fmt_value(s)}, {_fmt_value(f)}, {_fmt_value(v)})" for s, f, v in a) + "]"

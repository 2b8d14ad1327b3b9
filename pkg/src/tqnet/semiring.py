"""Value semirings.

Six fixed semirings are supported.  Each :class:`Semiring` carries its
zero, one and the raw binary operations as plain callables so that the
merge loops in :mod:`tqnet.tq` can bind them once and call them cheaply.
The checked entry points are :func:`s_add`, :func:`s_mul` and
:func:`s_star`.
"""

import math
from dataclasses import dataclass, field
from numbers import Integral, Real

from .errors import InvalidValueError, UnsupportedClosureError

INF = math.inf

KINDS = (
    "combinatorial",
    "reachability",
    "shortest_path",
    "maxmin",
    "geodetic",
    "pathfinder",
)

_ZERO = {
    "combinatorial": 0,
    "reachability": False,
    "shortest_path": INF,
    "maxmin": -INF,
    "geodetic": (INF, 0),
    "pathfinder": INF,
}

_ONE = {
    "combinatorial": 1,
    "reachability": True,
    "shortest_path": 0,
    "maxmin": INF,
    "geodetic": (0, 1),
    "pathfinder": 0,
}


def _geo_add(x, y):
    a, i = x
    b, j = y
    if a < b:
        return x
    if a > b:
        return y
    return (a, i + j)


def _geo_mul(x, y):
    d = x[0] + y[0]
    if d == INF:
        return (INF, 0)
    return (d, x[1] * y[1])


def _rnorm(r):
    if r == 1:
        return lambda a, b: a + b
    if r == INF:
        return max

    def mul(a, b):
        m = a if a > b else b
        if m == INF:
            return INF
        if m == 0:
            return 0.0
        return m * ((a / m) ** r + (b / m) ** r) ** (1.0 / r)

    return mul


def _is_real(x):
    return isinstance(x, Real) and not isinstance(x, bool) and not math.isnan(x)


def _is_nonneg(x):
    return _is_real(x) and x >= 0


def _is_geodetic(x):
    if not isinstance(x, tuple) or len(x) != 2:
        return False
    d, n = x
    if isinstance(n, bool) or not isinstance(n, Integral) or n < 0:
        return False
    if d == INF:
        return n == 0
    return isinstance(d, Integral) and not isinstance(d, bool) and d >= 0


_CONTAINS = {
    "combinatorial": _is_real,
    "reachability": lambda x: isinstance(x, bool),
    "shortest_path": _is_nonneg,
    "maxmin": _is_real,
    "geodetic": _is_geodetic,
    "pathfinder": _is_nonneg,
}


@dataclass(frozen=True)
class Semiring:
    """One of the six supported value semirings.

    ``r`` and ``q`` are only meaningful for the pathfinder kind: ``r`` is the
    Minkowski exponent used to compose consecutive link values and ``q`` caps
    the walk length.
    """

    kind: str
    r: float = 1
    q: float = INF
    add: object = field(init=False, repr=False, compare=False)
    mul: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown semiring kind {self.kind!r}")
        if not (self.r == INF or (_is_real(self.r) and self.r > 0)):
            raise ValueError(f"r must be positive or inf, got {self.r!r}")
        if not (self.q == INF or (isinstance(self.q, Integral) and self.q >= 1)):
            raise ValueError(f"q must be a positive integer or inf, got {self.q!r}")
        add, mul = {
            "combinatorial": (lambda x, y: x + y, lambda x, y: x * y),
            "reachability": (lambda x, y: x or y, lambda x, y: x and y),
            "shortest_path": (min, lambda x, y: x + y),
            "maxmin": (max, min),
            "geodetic": (_geo_add, _geo_mul),
            "pathfinder": (min, _rnorm(self.r)),
        }[self.kind]
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)

    @property
    def zero(self):
        return _ZERO[self.kind]

    @property
    def one(self):
        return _ONE[self.kind]

    @property
    def absorptive(self):
        return self.kind != "combinatorial"

    @property
    def closed(self):
        return self.absorptive

    @property
    def name(self):
        if self.kind == "pathfinder":
            return f"pathfinder(r={_fmt(self.r)},q={_fmt(self.q)})"
        return self.kind

    def contains(self, x):
        return _CONTAINS[self.kind](x)

    def check(self, x):
        if not _CONTAINS[self.kind](x):
            raise InvalidValueError(f"{x!r} is not a {self.kind} value")
        return x


def _fmt(x):
    return "inf" if x == INF else str(x)


COMBINATORIAL = Semiring("combinatorial")
REACHABILITY = Semiring("reachability")
SHORTEST_PATH = Semiring("shortest_path")
MAXMIN = Semiring("maxmin")
GEODETIC = Semiring("geodetic")


def pathfinder(r=1, q=INF):
    return Semiring("pathfinder", r=r, q=q)


def get_semiring(name, r=1, q=INF):
    """Look a semiring up by name (``shortest-path`` and ``path`` are accepted aliases)."""
    key = name.strip().lower().replace("-", "_")
    key = {"path": "shortest_path", "comb": "combinatorial", "reach": "reachability"}.get(key, key)
    if key == "pathfinder":
        return pathfinder(r, q)
    return Semiring(key)


def s_add(spec, x, y):
    return spec.add(spec.check(x), spec.check(y))


def s_mul(spec, x, y):
    return spec.mul(spec.check(x), spec.check(y))


def s_star(spec, x):
    """Closure of a single value; only absorptive semirings are supported."""
    if not spec.absorptive:
        raise UnsupportedClosureError(f"no closure over the {spec.kind} semiring")
    spec.check(x)
    return spec.one

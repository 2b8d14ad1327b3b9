"""Deterministic JSON rendering shared by network and result documents.

Objects are indented with sorted keys; temporal quantities stay on one line
so documents diff well.  Floats carry 6 significant digits, integers are
exact and infinities are written as the strings ``"inf"`` / ``"-inf"``.
"""

import json
import math

from .tq import FOREVER


class Inline(list):
    """A list rendered on a single line."""


def encode_number(x):
    if isinstance(x, bool):
        return x
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return x


def encode_value(v):
    if isinstance(v, tuple):
        return [encode_value(x) for x in v]
    return encode_number(v)


def encode_tq(a):
    return Inline([s, "inf" if f == FOREVER else f, encode_value(v)] for s, f, v in a)


def decode_number(x):
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    if isinstance(x, (bool, int, float)):
        return x
    raise ValueError(f"not a number: {x!r}")


def decode_value(v):
    if isinstance(v, list):
        return tuple(decode_value(x) for x in v)
    return decode_number(v)


def decode_time(t, allow_forever=False):
    if allow_forever and t == "inf":
        return FOREVER
    if isinstance(t, bool) or not isinstance(t, int):
        raise ValueError(f"time must be an integer, got {t!r}")
    return t


def decode_tq(raw):
    if not isinstance(raw, list):
        raise ValueError(f"a temporal quantity must be a list of triples, got {raw!r}")
    out = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError(f"expected a [s, f, v] triple, got {item!r}")
        s, f, v = item
        out.append((decode_time(s), decode_time(f, allow_forever=True), decode_value(v)))
    return out


def _scalar(x):
    if isinstance(x, float):
        text = format(x, ".6g")
        if not any(ch in text for ch in ".en"):
            text += ".0"
        return text
    return json.dumps(x, ensure_ascii=False)


def _inline(x):
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_inline(y) for y in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_inline(x[k])}" for k in sorted(x)) + "}"
    return _scalar(x)


def _render(x, indent):
    pad = "  " * (indent + 1)
    if isinstance(x, Inline):
        return _inline(x)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_render(x[k], indent + 1)}" for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(x, list):
        if not x:
            return "[]"
        if all(not isinstance(y, (dict, list)) for y in x):
            return _inline(x)
        items = [pad + _render(y, indent + 1) for y in x]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return _scalar(x)


def dumps(obj):
    return _render(obj, 0) + "\n"

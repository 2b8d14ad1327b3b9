"""The ``tjson`` network format.

A network document is a JSON object::

    {
      "time": {"min": 1, "max": 9},
      "nodes": [{"id": 1, "label": "a", "activity": [[1, 9, 1]]}, ...],
      "links": [{"from": 1, "to": 2, "directed": true, "tq": [[1, 5, 2]]}, ...],
      "meta": {"source": "..."}
    }

Intervals are half-open ``[s, f)``; an optional ``"interval"`` field must
then read ``"[s,f)"``.  A finish time of ``"inf"`` means the triple never
ends.  ``activity`` and ``directed`` are optional (full horizon and
``true``).
"""

import json
import warnings
from dataclasses import dataclass, field

from .errors import ConsistencyError, InputError, MalformedQuantityError, ParseError
from .jsonfmt import decode_time, decode_tq, dumps, encode_tq
from .semiring import COMBINATORIAL, INF
from .tmatrix import TemporalMatrix
from .tq import FOREVER, TimeHorizon, append_triple, overlay, standardize, tq_binary, tq_fill_gaps, tq_map, tq_prod, tq_sum

HALF_OPEN = ("[s,f)", "[)", "2")


class NormalizationWarning(UserWarning):
    """Input triples had to be reordered."""


@dataclass
class Node:
    id: int
    label: str
    activity: list = None


@dataclass
class Link:
    source: int
    target: int
    tq: list
    directed: bool = True


@dataclass
class NetworkDocument:
    horizon: TimeHorizon
    nodes: list
    links: list
    meta: dict = field(default_factory=dict)
    id_map: dict = field(default_factory=dict, compare=False)

    @property
    def n(self):
        return len(self.nodes)

    @property
    def labels(self):
        return tuple(node.label for node in self.nodes)

    def node_activity(self, i):
        """Activity of the node with 1-based id ``i``; unspecified means always active."""
        act = self.nodes[i - 1].activity
        if act is None:
            return [(self.horizon.t_min, FOREVER, 1)]
        return act

    def matrix(self, spec=COMBINATORIAL):
        """Dense matrix of link values; undirected links fill both directions."""
        A = TemporalMatrix.empty(self.n, spec, horizon=self.horizon, labels=self.labels)
        conv = _converter(spec)
        for link in self.links:
            a = tq_map(link.tq, conv, spec)
            u, v = link.source - 1, link.target - 1
            A.entries[u][v] = tq_sum(spec, A.entries[u][v], a)
            if not link.directed and u != v:
                A.entries[v][u] = tq_sum(spec, A.entries[v][u], a)
        return A


def _converter(spec):
    if spec.kind == "reachability":
        return lambda v: bool(v)
    if spec.kind == "geodetic":
        return lambda v: v if isinstance(v, tuple) else (1, 1)
    return lambda v: v


def _fail(msg):
    raise InputError(msg)


def _quantity(raw, where, horizon):
    try:
        a = decode_tq(raw)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None
    ordered = sorted(a, key=lambda t: (t[0], t[1]))
    if ordered != a:
        warnings.warn(f"{where}: triples were not sorted; reordered", NormalizationWarning, stacklevel=3)
    try:
        a = standardize(ordered)
    except MalformedQuantityError as exc:
        raise InputError(f"{where}: {exc}") from None
    for s, f, _ in a:
        if s < horizon.t_min or (f > horizon.t_max and f != FOREVER):
            raise InputError(f"{where}: interval [{s}, {f}) outside the horizon [{horizon.t_min}, {horizon.t_max})")
    return a


def _uncovered(a, mask):
    """Pieces of ``a``'s activity not covered by ``mask``."""
    if not a:
        return []
    s, f = a[0][0], a[-1][1]
    holes = tq_fill_gaps(tq_binary(mask, True), s, f, False)
    c = []
    for s_, f_, (covered, _) in overlay(holes, a):
        if not covered:
            append_triple(c, s_, f_, 1)
    return [(s_, f_) for s_, f_, _ in c]


def parse_network(data, expand_undirected=False, check_consistency=True):
    """Validate a decoded tjson object and build a :class:`NetworkDocument`."""
    if not isinstance(data, dict):
        _fail("network document must be a JSON object")
    interval = data.get("interval", "[s,f)")
    if str(interval).replace(" ", "") not in HALF_OPEN:
        _fail(f"unsupported interval type {interval!r}: only half-open [s,f) intervals are accepted")
    time = data.get("time")
    if not isinstance(time, dict) or "min" not in time or "max" not in time:
        _fail("missing time {min, max}")
    try:
        horizon = TimeHorizon(decode_time(time["min"]), decode_time(time["max"]))
    except ValueError as exc:
        raise InputError(f"time: {exc}") from None

    raw_nodes = data.get("nodes", [])
    if not isinstance(raw_nodes, list):
        _fail("nodes must be a list")
    seen = {}
    for k, rn in enumerate(raw_nodes):
        if not isinstance(rn, dict) or "id" not in rn:
            _fail(f"node #{k + 1}: missing id")
        i = rn["id"]
        if isinstance(i, bool) or not isinstance(i, int) or i < 1:
            _fail(f"node #{k + 1}: id must be a positive integer, got {i!r}")
        if i in seen:
            _fail(f"duplicate node id {i}")
        seen[i] = rn
    id_map = {old: new for new, old in enumerate(sorted(seen), start=1)}
    nodes = []
    for old in sorted(seen):
        rn = seen[old]
        act = rn.get("activity")
        if act is not None:
            act = tq_binary(_quantity(act, f"node {old} activity", horizon), 1)
        nodes.append(Node(id_map[old], str(rn.get("label", old)), act))

    raw_links = data.get("links", [])
    if not isinstance(raw_links, list):
        _fail("links must be a list")
    links = []
    for k, rl in enumerate(raw_links):
        if not isinstance(rl, dict):
            _fail(f"link #{k + 1}: must be an object")
        u, v = rl.get("from"), rl.get("to")
        if u not in id_map or v not in id_map:
            _fail(f"link #{k + 1}: unknown end node {u if u not in id_map else v!r}")
        directed = rl.get("directed", True)
        if not isinstance(directed, bool):
            _fail(f"link #{k + 1}: directed must be true or false")
        tq = _quantity(rl.get("tq", []), f"link {u}->{v}", horizon)
        links.append(Link(id_map[u], id_map[v], tq, directed))

    meta = data.get("meta", {})
    if not isinstance(meta, dict):
        _fail("meta must be an object")
    doc = NetworkDocument(horizon, nodes, links, {str(k): str(v) for k, v in meta.items()}, id_map)
    if check_consistency:
        check_network(doc)
    if expand_undirected:
        doc.links = expand(doc.links)
    return doc


def expand(links):
    """Replace every undirected link by a pair of opposite arcs."""
    out = []
    for link in links:
        if link.directed:
            out.append(link)
        else:
            out.append(Link(link.source, link.target, link.tq, True))
            if link.source != link.target:
                out.append(Link(link.target, link.source, link.tq, True))
    return out


def check_network(doc):
    """Raise :class:`ConsistencyError` if a link is active while an end node is not."""
    bad = []
    inv = {new: old for old, new in doc.id_map.items()} or {node.id: node.id for node in doc.nodes}
    for link in doc.links:
        mask = tq_prod(COMBINATORIAL, doc.node_activity(link.source), doc.node_activity(link.target))
        holes = _uncovered(link.tq, mask)
        if holes:
            bad.append((inv.get(link.source, link.source), inv.get(link.target, link.target), holes))
    if bad:
        raise ConsistencyError(bad)


def load_network(source, format="tjson", expand_undirected=False, check_consistency=True):
    """Read a network document from a path, text or a binary/text stream."""
    if format != "tjson":
        raise InputError(f"unsupported format {format!r}")
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "rb") as fh:
            text = fh.read()
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8 text: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return parse_network(data, expand_undirected, check_consistency)


def network_to_json(doc):
    nodes = []
    for node in doc.nodes:
        item = {"id": node.id, "label": node.label}
        if node.activity is not None:
            item["activity"] = encode_tq(node.activity)
        nodes.append(item)
    links = [
        {"from": l.source, "to": l.target, "directed": l.directed, "tq": encode_tq(l.tq)} for l in doc.links
    ]
    return {
        "time": {"min": doc.horizon.t_min, "max": doc.horizon.t_max},
        "nodes": nodes,
        "links": links,
        "meta": dict(doc.meta),
    }


def dump_network(doc, sink=None):
    text = dumps(network_to_json(doc))
    if sink is not None:
        sink.write(text)
    return text


def network_from_matrix(A, template=None):
    """Network document holding the nonempty entries of ``A`` as directed links."""
    n = A.n
    if template is not None:
        horizon, nodes, meta = template.horizon, template.nodes, dict(template.meta)
    else:
        lo, hi = A.time_window()
        horizon = A.horizon or TimeHorizon(int(lo) if lo != INF else 0, int(hi) if hi not in (INF, -INF) else 1)
        labels = A.labels or tuple(str(i + 1) for i in range(n))
        nodes = [Node(i + 1, labels[i]) for i in range(n)]
        meta = {}
    links = [Link(u + 1, v + 1, list(a)) for u, v, a in A.nonempty()]
    return NetworkDocument(horizon, list(nodes), links, meta)


__all__ = [
    "Link",
    "NetworkDocument",
    "Node",
    "NormalizationWarning",
    "check_network",
    "dump_network",
    "expand",
    "load_network",
    "network_from_matrix",
    "network_to_json",
    "parse_network",
]

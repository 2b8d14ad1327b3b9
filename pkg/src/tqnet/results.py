"""Result documents and chart export."""

import csv
import hashlib
import json
from dataclasses import dataclass, field

from .errors import InputError, ParseError
from .jsonfmt import _scalar, decode_number, decode_tq, dumps, encode_number, encode_tq
from .semiring import Semiring
from .tjson import network_to_json, parse_network
from .tmatrix import TemporalMatrix
from .tq import TimeHorizon

KINDS = ("vector", "partition", "matrix", "quantity", "skeleton")


@dataclass
class ResultDocument:
    """An analysis result plus where it came from.

    ``payload`` is a list of quantities for vectors and partitions, a single
    quantity, a :class:`TemporalMatrix` or, for skeletons, a network
    document.  ``nodes`` lists ``(id, label)`` pairs for node-indexed results.
    """

    kind: str
    payload: object
    semiring: Semiring = None
    nodes: list = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown result kind {self.kind!r}")


def digest(data):
    return "sha256:" + hashlib.sha256(data).hexdigest()


def provenance(command, input_bytes=None, parameters=None, seed=None):
    return {
        "command": command,
        "input_digest": digest(input_bytes) if input_bytes is not None else None,
        "parameters": dict(parameters or {}),
        "seed": seed,
    }


def _spec_to_json(spec):
    if spec is None:
        return None
    out = {"kind": spec.kind}
    if spec.kind == "pathfinder":
        out["r"] = encode_number(spec.r)
        out["q"] = encode_number(spec.q)
    return out


def _spec_from_json(raw):
    if raw is None:
        return None
    if raw["kind"] == "pathfinder":
        return Semiring("pathfinder", decode_number(raw["r"]), decode_number(raw["q"]))
    return Semiring(raw["kind"])


def _node_rows(result, quantities):
    nodes = result.nodes or [(i + 1, None) for i in range(len(quantities))]
    return [{"node": i, "label": label, "tq": encode_tq(a)} for (i, label), a in zip(nodes, quantities)]


def result_to_json(result):
    kind, p = result.kind, result.payload
    if kind in ("vector", "partition"):
        payload = _node_rows(result, p)
    elif kind == "quantity":
        payload = encode_tq(p)
    elif kind == "matrix":
        payload = {
            "n": len(p.entries),
            "horizon": None if p.horizon is None else {"min": p.horizon.t_min, "max": p.horizon.t_max},
            "labels": None if p.labels is None else list(p.labels),
            "entries": [{"from": u + 1, "to": v + 1, "tq": encode_tq(a)} for u, v, a in p.nonempty()],
        }
    else:
        payload = network_to_json(p)
    return {
        "kind": kind,
        "semiring": _spec_to_json(result.semiring),
        "provenance": result.provenance,
        "payload": payload,
    }


def result_from_json(data):
    kind = data["kind"]
    spec = _spec_from_json(data.get("semiring"))
    raw = data["payload"]
    nodes = None
    if kind in ("vector", "partition"):
        payload = [decode_tq(row["tq"]) for row in raw]
        if any(row.get("label") is not None for row in raw):
            nodes = [(row["node"], row["label"]) for row in raw]
    elif kind == "quantity":
        payload = decode_tq(raw)
    elif kind == "matrix":
        h = raw.get("horizon")
        horizon = None if h is None else TimeHorizon(h["min"], h["max"])
        labels = None if raw.get("labels") is None else tuple(raw["labels"])
        payload = TemporalMatrix.empty(raw["n"], spec, horizon=horizon, labels=labels)
        for e in raw["entries"]:
            payload.entries[e["from"] - 1][e["to"] - 1] = decode_tq(e["tq"])
    elif kind == "skeleton":
        payload = parse_network(raw, check_consistency=False)
    else:
        raise InputError(f"unknown result kind {kind!r}")
    return ResultDocument(kind, payload, spec, nodes, data.get("provenance", {}))


def dumps_result(result):
    return dumps(result_to_json(result))


def save_result(result, sink):
    """Write the canonical serialization of ``result`` to a text stream."""
    sink.write(dumps_result(result))


def load_result(source):
    text = source.read() if hasattr(source, "read") else source
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return result_from_json(data)


def export_chart_data(v, sink, nodes=None):
    """Write step-function rows ``node,s,f,value`` for every triple of every node."""
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(["node", "s", "f", "value"])
    ids = [i for i, _ in nodes] if nodes else range(1, len(v) + 1)
    for i, a in zip(ids, v):
        for s, f, x in a:
            w.writerow([i, s, _scalar(encode_number(f)).strip('"'), _scalar(encode_number(x)).strip('"')])

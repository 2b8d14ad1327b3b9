"""Command-line front end.

Every subcommand reads a network (``cooccur`` reads an event table), runs
one analysis and writes a result document.  Exit codes: 0 success, 1 usage
error, 2 input error, 3 computation error.  Diagnostics are single lines
``error: <category>: <detail>`` on stderr.
"""

import argparse
import io
import json
import os
import sys

from . import analysis
from .errors import InputError, TQError
from .semiring import COMBINATORIAL, INF, get_semiring
from .tjson import load_network, network_from_matrix
from .tmatrix import mat_closure
from .tq import tq_total
from .jsonfmt import dumps
from .results import ResultDocument, export_chart_data, provenance, save_result

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3

COMMANDS = (
    "degrees",
    "activity",
    "cooccur",
    "cluscoef",
    "closure",
    "reach",
    "weakconn",
    "strongconn",
    "closeness",
    "betweenness",
    "pathfinder",
    "attraction",
    "total",
    "info",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _inf_or(conv):
    def parse(text):
        if text.strip().lower() in ("inf", "infinity"):
            return INF
        try:
            return conv(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid value {text!r}") from None

    return parse


def _bool(text):
    t = text.strip().lower()
    if t in ("true", "1", "yes", "on"):
        return True
    if t in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--input", required=True, help="input tjson document ('-' for stdin)")
    common.add_argument("--output", help="result file (default: stdout)")
    common.add_argument("--semiring", default=None)
    common.add_argument("--type", type=int, default=None)
    common.add_argument("--r", type=_inf_or(float), default=1.0)
    common.add_argument("--q", type=_inf_or(int), default=INF)
    common.add_argument("--strict", type=_bool, default=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--direction", choices=("in", "out"), default=None)
    common.add_argument("--nodes", default=None, help="node groups as 'V1[:V2]', ids comma separated")
    common.add_argument("--mode", choices=("instantaneous", "cumulative"), default="instantaneous")
    common.add_argument("--chart", help="also write node,s,f,value rows for vector results")
    parser = _Parser(prog="tqnet", description="Temporal network analysis with temporal quantities.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _read_input(path):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return data


def _node_list(text, id_map):
    ids = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            i = int(part)
        except ValueError:
            raise UsageError(f"bad node id {part!r}") from None
        if i not in id_map:
            raise UsageError(f"unknown node id {i}")
        ids.append(id_map[i] - 1)
    return ids


def _node_groups(text, doc):
    everyone = list(range(doc.n))
    if not text:
        return everyone, everyone
    first, _, second = text.partition(":")
    v1 = _node_list(first, doc.id_map)
    v2 = _node_list(second, doc.id_map) if second else everyone
    return v1, v2


def _load_events(data):
    try:
        raw = json.loads(data.decode("utf-8"))
        events = [(e["id"], e["participants"], e["date"]) for e in raw["events"]]
        return analysis.EventTable(events, raw["first"], raw["last"])
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad event table: {exc}") from None


def _nodes_of(doc):
    inv = {new: old for old, new in doc.id_map.items()}
    return [(inv.get(node.id, node.id), node.label) for node in doc.nodes]


def _seed(args):
    env = os.environ.get("TQNET_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"TQNET_SEED must be an integer, got {env!r}") from None
    return analysis.DEFAULT_SEED if args.seed is None else args.seed


def _num(x):
    return "inf" if x == INF else (int(x) if float(x).is_integer() else x)


def run(args, data):
    """Dispatch one parsed command; returns a ResultDocument or a plain dict for ``info``."""
    cmd = args.command
    if cmd == "cooccur":
        table = _load_events(data)
        C = analysis.co_occurrence(table, args.mode)
        return ResultDocument("matrix", C, C.spec, None, provenance(cmd, data, {"mode": args.mode}))

    doc = load_network(io.BytesIO(data))
    nodes = _nodes_of(doc)
    params = {}
    seed = None
    if cmd == "info":
        return {
            "nodes": doc.n,
            "links": len(doc.links),
            "directed": sum(1 for l in doc.links if l.directed),
            "time": {"min": doc.horizon.t_min, "max": doc.horizon.t_max},
            "meta": doc.meta,
        }
    if cmd == "closure":
        spec = get_semiring(args.semiring or "reachability", args.r, args.q)
        params = {"semiring": spec.kind, "strict": args.strict}
        C = mat_closure(doc.matrix(spec), strict=args.strict)
        return ResultDocument("matrix", C, spec, None, provenance(cmd, data, params))
    if cmd == "pathfinder":
        params = {"r": _num(args.r), "q": _num(args.q)}
        PF = analysis.path_finder(doc.matrix(COMBINATORIAL), args.r, args.q)
        skeleton = network_from_matrix(PF, template=doc)
        return ResultDocument("skeleton", skeleton, COMBINATORIAL, None, provenance(cmd, data, params))

    A = doc.matrix(COMBINATORIAL)
    kind = "vector"
    if cmd == "degrees":
        params = {"direction": args.direction or "out"}
        out = analysis.degrees(A, params["direction"])
    elif cmd == "activity":
        v1, v2 = _node_groups(args.nodes, doc)
        params = {"nodes": args.nodes or ""}
        act = analysis.activity(A, v1, v2)
        return ResultDocument("quantity", act, COMBINATORIAL, None, provenance(cmd, data, params))
    elif cmd == "cluscoef":
        params = {"type": args.type or 1}
        out = analysis.clus_coef(A, params["type"])
    elif cmd == "reach":
        params = {"direction": args.direction or "in"}
        out = analysis.reach_degrees(A, params["direction"])
    elif cmd in ("weakconn", "strongconn"):
        seed = _seed(args)
        fn = analysis.weak_connectivity if cmd == "weakconn" else analysis.strong_connectivity
        _, out = fn(A, seed)
        kind = "partition"
    elif cmd == "closeness":
        params = {"type": args.type or 2}
        out = analysis.closeness(A, params["type"])
    elif cmd == "betweenness":
        out = analysis.betweenness(A)
    elif cmd == "attraction":
        out = analysis.attraction(A)
    elif cmd == "total":
        params = {"direction": args.direction or "out"}
        h = doc.horizon
        out = []
        for u in range(doc.n):
            group = ([u], range(doc.n)) if params["direction"] == "out" else (range(doc.n), [u])
            total = tq_total(analysis.activity(A, *group))
            out.append([(h.t_min, h.t_max, total)] if total else [])
    else:
        raise UsageError(f"unknown command {cmd!r}")
    return ResultDocument(kind, out, COMBINATORIAL, nodes, provenance(cmd, data, params, seed))


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing command; one of " + ", ".join(COMMANDS))
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = run(args, data)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TQError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: computation: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    try:
        if isinstance(result, dict):
            _emit(dumps(result), args.output)
            return EXIT_OK
        buf = io.StringIO()
        save_result(result, buf)
        _emit(buf.getvalue(), args.output)
        if args.chart and result.kind in ("vector", "partition"):
            with open(args.chart, "w", encoding="utf-8", newline="") as fh:
                export_chart_data(result.payload, fh, result.nodes)
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

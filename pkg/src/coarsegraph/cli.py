"""Batch front door: parse inputs, run pipelines, emit JSON reports.

Every subcommand prints one JSON report to stdout.  Exit codes: 0 success,
1 verification failure (a witness, failure point, falsification or
disconnected net), 2 input error.  Reports are byte-identical across runs
for identical inputs and flags; timing is only recorded under --timing.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from . import claims as claims_mod
from . import discretize, extraction, generators, order_compat, qi_cert, search
from . import selector as selector_mod
from .graph_core import Graph, GraphError, PathMetric, build_graph, geodesic_between
from .hyperspace import hausdorff_distance, pair_neighbors
from .selector import Holds, TwoSelector, Witness


class InputError(Exception):
    pass


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from exc


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_graph_file(text: str) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}, column 1: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            col = raw.index(parts[-1]) + 1
            raise InputError(f"line {lineno}, column {col}: vertex ids must be integers")
        edges.append((u, v))
    try:
        return build_graph(edges)
    except GraphError as exc:
        raise InputError(str(exc)) from exc


def parse_generate(spec: str) -> Graph:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "path":
            return generators.path_graph(int(rest))
        if kind == "cycle":
            return generators.cycle_graph(int(rest))
        if kind == "grid":
            w, h = rest.split("x")
            return generators.grid_graph(int(w), int(h))
        if kind == "tripod":
            a, b, c = (int(x) for x in rest.split(","))
            return generators.tripod_graph(a, b, c)
        if kind == "comb":
            s, t = (int(x) for x in rest.split(","))
            return generators.comb_graph(s, t)
    except (ValueError, GraphError) as exc:
        raise InputError(f"bad generator spec {spec!r}: {exc}") from exc
    raise InputError(f"unknown generator {kind!r} (use path/cycle/grid/tripod/comb)")


def parse_order_file(text: str, n: int) -> order_compat.LinearOrder:
    ranking = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            ranking.append(int(stripped))
        except ValueError:
            raise InputError(f"line {lineno}, column 1: expected a vertex id")
    if sorted(ranking) != list(range(n)):
        raise InputError(f"order file must list each of 0..{n - 1} exactly once")
    return order_compat.LinearOrder.from_ranking(ranking)


def parse_selector_file(text: str) -> dict:
    table = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            left, right = stripped.split("->")
            a, b = (int(x) for x in left.split())
            c = int(right)
        except ValueError:
            raise InputError(f"line {lineno}, column 1: expected 'a b -> c'")
        if c not in (a, b):
            raise InputError(f"line {lineno}: choice {c} not in pair {{{a}, {b}}}")
        table[(a, b) if a < b else (b, a)] = c
    return table


def load_graph(args) -> Graph:
    if getattr(args, "generate", None):
        return parse_generate(args.generate)
    if getattr(args, "graph", None):
        return parse_graph_file(_read(args.graph))
    raise InputError("supply --graph FILE or --generate SPEC")


def load_selector(args, graph: Graph) -> TwoSelector:
    spec = getattr(args, "selector", None)
    if not spec:
        raise InputError("supply --selector min|lexmin|order:FILE|file:FILE")
    if spec in ("min", "lexmin"):
        # ids are row-major on generated grids, so lexmin and min coincide
        return selector_mod.min_selector(list(range(graph.vertex_count)))
    kind, _, path = spec.partition(":")
    if kind == "order":
        order = parse_order_file(_read(path), graph.vertex_count)
        return selector_mod.order_to_selector(order)
    if kind == "file":
        return selector_mod.selector_from_table(parse_selector_file(_read(path)))
    raise InputError(f"unknown selector spec {spec!r}")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _digest(args) -> dict:
    h = hashlib.sha256()
    for key in sorted(vars(args)):
        if key in ("func", "timing"):
            continue
        value = getattr(args, key)
        h.update(f"{key}={value!r}\n".encode())
        if key in ("graph", "order", "cert", "sample") and value:
            try:
                h.update(_read(value).encode())
            except InputError:
                pass
        if key == "selector" and value and ":" in str(value):
            _, _, path = str(value).partition(":")
            try:
                h.update(_read(path).encode())
            except InputError:
                pass
    return {"sha256": h.hexdigest()}


def _vertex_list(text: str, graph: Graph | None = None) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"bad vertex list {text!r}: {exc}") from exc
    if graph is not None:
        for v in out:
            if not 0 <= v < graph.vertex_count:
                raise InputError(f"vertex {v} out of range 0..{graph.vertex_count - 1}")
    return out


def _cert_payload(cert: qi_cert.QuasiIsometryCert) -> dict:
    return {
        "coord": [[v, cert.coord[v]] for v in sorted(cert.coord)],
        "lambda": _frac_str(cert.lam),
        "C": cert.C,
        "D": cert.D,
    }


def _witness_payload(w) -> dict:
    return {"pair_a": list(w[0]), "pair_b": list(w[1])}


# --- subcommand handlers: return (outcome dict, exit code) ---------------


def cmd_metric(args):
    g = load_graph(args)
    m = PathMetric(g)
    out = []
    for spec in args.pairs:
        u, v = _vertex_list(spec, g)
        entry = {"u": u, "v": v, "d": m.distance(u, v)}
        if args.geodesic:
            entry["geodesic"] = list(geodesic_between(m, u, v).vertices)
        out.append(entry)
    return {"distances": out, "vertices": g.vertex_count}, 0


def cmd_hausdorff(args):
    g = load_graph(args)
    m = PathMetric(g)
    A = _vertex_list(args.set_a, g)
    B = _vertex_list(args.set_b, g)
    d = hausdorff_distance(m, A, B)
    outcome = {"set_a": sorted(set(A)), "set_b": sorted(set(B)), "d_H": d}
    if args.neighbors_of:
        pair = _vertex_list(args.neighbors_of, g)
        outcome["pair_neighbors"] = sorted(
            list(p) for p in pair_neighbors(m, tuple(pair))
        )
    return outcome, 0


def cmd_selector_modulus(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = load_selector(args, g)
    res = selector_mod.modulus(m, f)
    return {
        "r": res.r,
        "witness": _witness_payload(res.witness),
    }, 0


def cmd_selector_verify(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = load_selector(args, g)
    verdict = selector_mod.verify_selector(m, f, args.r)
    if isinstance(verdict, Holds):
        return {"r": args.r, "verdict": "holds"}, 0
    return {
        "r": args.r,
        "verdict": "witness",
        "witness": _witness_payload((verdict.pair_a, verdict.pair_b)),
    }, 1


def _selector_table_payload(m, f, cap=2000):
    n = m.graph.vertex_count
    if n * (n - 1) // 2 > cap:
        return None
    table = selector_mod.materialize_table(m, f)
    return [[a, b, c] for (a, b), c in sorted(table.items())]


def cmd_selector_min(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = selector_mod.min_selector(list(range(g.vertex_count)))
    res = selector_mod.modulus(m, f)
    return {"r": res.r, "table": _selector_table_payload(m, f)}, 0


def cmd_selector_from_order(args):
    g = load_graph(args)
    m = PathMetric(g)
    order = parse_order_file(_read(args.order), g.vertex_count)
    f = selector_mod.order_to_selector(order)
    res = selector_mod.modulus(m, f)
    return {"r": res.r, "table": _selector_table_payload(m, f)}, 0


def cmd_selector_search(args):
    g = load_graph(args)
    outcomes = search.min_modulus_search(g, args.r_cap, node_budget=args.budget)
    payload = []
    for oc in outcomes:
        if isinstance(oc, search.Feasible):
            payload.append({"r": oc.r, "feasible": True, "nodes": oc.nodes})
        else:
            payload.append(
                {"r": oc.r, "feasible": False, "nodes": oc.nodes, "backtracks": oc.backtracks}
            )
    feasible = [e["r"] for e in payload if e["feasible"]]
    return {
        "outcomes": payload,
        "minimal_modulus": feasible[0] if feasible else None,
    }, 0


def _claim_outcome_payload(outcome):
    if isinstance(outcome, Holds):
        return {"verdict": "holds"}, 0
    if isinstance(outcome, Witness):
        return {
            "verdict": "witness",
            "witness": _witness_payload((outcome.pair_a, outcome.pair_b)),
        }, 1
    if isinstance(outcome, claims_mod.HypothesisUnmet):
        return {"verdict": "hypothesis_unmet", "reason": outcome.reason}, 0
    if isinstance(outcome, claims_mod.LeftEnd):
        return {"verdict": "left_end", "j": outcome.j}, 0
    if isinstance(outcome, claims_mod.RightEnd):
        return {"verdict": "right_end", "j": outcome.j}, 0
    raise AssertionError(f"unknown outcome {outcome!r}")


def _check_vertex(g: Graph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise InputError(f"vertex {v} out of range 0..{g.vertex_count - 1}")
    return v


def cmd_claims_c1(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = load_selector(args, g)
    for v in (args.v, args.a, args.b):
        _check_vertex(g, v)
    outcome = claims_mod.claim1_propagate(m, f, args.r, args.v, args.a, args.b, args.p)
    return _claim_outcome_payload(outcome)


def cmd_claims_c2(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = load_selector(args, g)
    config = claims_mod.ClaimConfig(
        v=_check_vertex(g, args.v), z=tuple(_vertex_list(args.z, g)), p=args.p
    )
    outcome = claims_mod.claim2_check(m, f, args.r, config)
    return _claim_outcome_payload(outcome)


def cmd_claims_c3(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = load_selector(args, g)
    outcome = claims_mod.claim3_side(
        m, f, args.r, _vertex_list(args.z, g), _check_vertex(g, args.v), args.p, q=args.q
    )
    return _claim_outcome_payload(outcome)


def cmd_extract(args):
    g = load_graph(args)
    m = PathMetric(g)
    f = load_selector(args, g)
    result = extraction.extract_line(m, f, r=args.assert_r)
    diag = dict(result.diagnostics)
    diag["anomalies"] = list(diag.get("anomalies", []))
    if isinstance(result, extraction.Bounded):
        return {"result": "bounded", "radius": result.radius, "diagnostics": diag}, 0
    if isinstance(result, extraction.Falsified):
        return {
            "result": "falsified",
            "witness": _witness_payload(result.witness),
            "diagnostics": diag,
        }, 1
    kind = "ray" if isinstance(result, extraction.Ray) else "line"
    return {
        "result": kind,
        "certificate": _cert_payload(result.cert),
        "diagnostics": diag,
    }, 0


def _load_cert(args) -> qi_cert.QuasiIsometryCert:
    if args.cert:
        try:
            payload = json.loads(_read(args.cert))
        except json.JSONDecodeError as exc:
            raise InputError(f"bad certificate JSON: {exc}") from exc
        block = payload
        for key in ("outcome", "certificate"):
            if isinstance(block, dict) and key in block:
                block = block[key]
        try:
            coord = {int(v): int(c) for v, c in block["coord"]}
            return qi_cert.QuasiIsometryCert(
                coord, _frac(str(block["lambda"])), int(block["C"]), int(block["D"])
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad certificate payload: {exc}") from exc
    if not args.coord:
        raise InputError("supply --cert FILE or --coord FILE with --lam/--C/--D")
    coord = {}
    for lineno, raw in enumerate(_read(args.coord).splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}, column 1: expected 'vertex value'")
        coord[int(parts[0])] = int(parts[1])
    return qi_cert.QuasiIsometryCert(coord, _frac(args.lam), args.c_const, args.d_const)


def cmd_qi_verify(args):
    g = load_graph(args)
    m = PathMetric(g)
    cert = _load_cert(args)
    try:
        verdict = qi_cert.verify_qi(m, cert)
    except ValueError as exc:
        raise InputError(f"unusable certificate: {exc}") from exc
    if isinstance(verdict, qi_cert.Valid):
        return {"verdict": "valid", "certificate": _cert_payload(cert)}, 0
    payload = {"verdict": "failure", "u": verdict.u}
    if verdict.v is not None:
        payload["v"] = verdict.v
        payload["kind"] = "distance_bound"
    else:
        payload["kind"] = "coverage"
    return payload, 1


def _load_space(args) -> discretize.FiniteMetricSpace:
    if args.sample:
        try:
            return discretize.parse_sample_file(_read(args.sample))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if not args.shape:
        raise InputError("supply --shape KIND:DIMS --step Q or --sample FILE")
    kind, _, rest = args.shape.partition(":")
    try:
        if kind in ("segment", "circle"):
            shape = (kind, Fraction(rest))
        elif kind == "rectangle":
            w, h = rest.split("x")
            shape = (kind, Fraction(w), Fraction(h))
        else:
            raise ValueError(f"unknown shape {kind!r}")
        return discretize.sample_space(shape, _frac(args.step))
    except (ValueError, discretize.StepTooCoarse) as exc:
        raise InputError(str(exc)) from exc


def _point_label(pt) -> str:
    if isinstance(pt, tuple):
        return "(" + ",".join(_frac_str(x) for x in pt) + ")"
    return _frac_str(pt)


def cmd_net_build(args):
    space = _load_space(args)
    net = discretize.greedy_net(space)
    try:
        graph = discretize.net_graph(space, net)
    except discretize.DisconnectedNetGraph as exc:
        return {
            "net": [_point_label(space.points[i]) for i in net.indices],
            "error": "disconnected_net_graph",
            "components": exc.components,
        }, 1
    return {
        "net": [_point_label(space.points[i]) for i in net.indices],
        "net_indices": list(net.indices),
        "edges": graph.edge_list(),
        "vertices": graph.vertex_count,
    }, 0


def cmd_net_certify(args):
    space = _load_space(args)
    net = discretize.greedy_net(space)
    graph = discretize.net_graph(space, net)
    cert = discretize.certify_net(space, net, graph)
    return {
        "net_indices": list(net.indices),
        "largeness": _frac_str(cert.largeness),
        "max_ambient_over_4graph": _frac_str(cert.max_ambient_over_4graph),
        "max_4graph_over_ambient": _frac_str(cert.max_4graph_over_ambient),
    }, 0


def cmd_sample(args):
    space = _load_space(args)
    text = discretize.write_sample_file(space)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return {
        "points": space.n,
        "delta": _frac_str(space.delta),
        "written": args.out,
    }, 0


def _load_order(args, n: int) -> order_compat.LinearOrder:
    if args.order == "natural" or args.order is None:
        return order_compat.LinearOrder.natural(n)
    return parse_order_file(_read(args.order), n)


def cmd_order_compat(args):
    g = load_graph(args)
    m = PathMetric(g)
    order = _load_order(args, g.vertex_count)
    report = order_compat.min_compat_radius(m, order, args.e, cap=args.cap)
    f = selector_mod.order_to_selector(order)
    sel_r = selector_mod.modulus(m, f).r if g.vertex_count >= 2 else 0
    payload = {"e": report.e, "order_selector_modulus": sel_r}
    if isinstance(report.result, order_compat.MinimalG):
        payload["result"] = {"g": report.result.g}
        return payload, 0
    payload["result"] = {"not_found_cap": report.result.cap}
    payload["violations"] = [list(t) for t in report.violations]
    return payload, 0


def cmd_order_interval(args):
    g = load_graph(args)
    m = PathMetric(g)
    order = _load_order(args, g.vertex_count)
    verdict = order_compat.is_interval_entourage(m, order, args.e)
    if verdict is True:
        return {"e": args.e, "interval": True}, 0
    return {
        "e": args.e,
        "interval": False,
        "counterexample": {"x": verdict.x, "gap_vertex": verdict.gap_vertex},
    }, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coarsegraph")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        p.add_argument("--graph", help="edge list file: one 'u v' per line")
        p.add_argument("--generate", help="path:N | cycle:N | grid:WxH | tripod:A,B,C | comb:S,T")
        p.add_argument("--timing", action="store_true", help="record wall time in the report")

    p = sub.add_parser("metric", help="distances and geodesics")
    graph_opts(p)
    p.add_argument("--pairs", action="append", required=True, metavar="U,V")
    p.add_argument("--geodesic", action="store_true")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("hausdorff", help="Hausdorff distance between vertex sets")
    graph_opts(p)
    p.add_argument("--set-a", required=True)
    p.add_argument("--set-b", required=True)
    p.add_argument("--neighbors-of", help="also list all pairs within d_H 1 of this pair")
    p.set_defaults(func=cmd_hausdorff)

    ps = sub.add_parser("selector", help="selector operations")
    ssub = ps.add_subparsers(dest="subcommand", required=True)
    for name, func in (
        ("modulus", cmd_selector_modulus),
        ("verify", cmd_selector_verify),
        ("min", cmd_selector_min),
        ("from-order", cmd_selector_from_order),
        ("search", cmd_selector_search),
    ):
        q = ssub.add_parser(name)
        graph_opts(q)
        if name in ("modulus", "verify"):
            q.add_argument("--selector", required=True)
        if name == "verify":
            q.add_argument("--r", type=int, required=True)
        if name == "from-order":
            q.add_argument("--order", required=True)
        if name == "search":
            q.add_argument("--r-cap", type=int, required=True)
            q.add_argument("--budget", type=int, default=500_000)
        q.set_defaults(func=func)

    pc = sub.add_parser("claims", help="consistency checks against a claimed modulus")
    csub = pc.add_subparsers(dest="subcommand", required=True)
    for name, func in (("c1", cmd_claims_c1), ("c2", cmd_claims_c2), ("c3", cmd_claims_c3)):
        q = csub.add_parser(name)
        graph_opts(q)
        q.add_argument("--selector", required=True)
        q.add_argument("--r", type=int, required=True)
        q.add_argument("--p", type=int, required=True)
        q.add_argument("--v", type=int, required=True)
        if name == "c1":
            q.add_argument("--a", type=int, required=True)
            q.add_argument("--b", type=int, required=True)
        else:
            q.add_argument("--z", required=True, metavar="Z0,Z1,...")
        if name == "c3":
            q.add_argument("--q", type=int, default=None)
        q.set_defaults(func=func)

    p = sub.add_parser("extract", help="coarse ray/line extraction")
    graph_opts(p)
    p.add_argument("--selector", required=True)
    p.add_argument("--assert-r", type=int, default=None)
    p.set_defaults(func=cmd_extract)

    pq = sub.add_parser("qi", help="quasi-isometry certificates")
    qsub = pq.add_subparsers(dest="subcommand", required=True)
    q = qsub.add_parser("verify")
    graph_opts(q)
    q.add_argument("--cert", help="JSON report or certificate block")
    q.add_argument("--coord", help="file with 'vertex value' lines")
    q.add_argument("--lam", default="1")
    q.add_argument("--C", dest="c_const", type=int, default=0)
    q.add_argument("--D", dest="d_const", type=int, default=0)
    q.set_defaults(func=cmd_qi_verify)

    pn = sub.add_parser("net", help="separation nets on metric samples")
    nsub = pn.add_subparsers(dest="subcommand", required=True)
    for name, func in (("build", cmd_net_build), ("certify", cmd_net_certify)):
        q = nsub.add_parser(name)
        q.add_argument("--shape", help="segment:L | circle:C | rectangle:WxH")
        q.add_argument("--step", default="1/2")
        q.add_argument("--sample", help="metric sample file")
        q.add_argument("--timing", action="store_true")
        q.set_defaults(func=func)

    p = sub.add_parser("sample", help="emit a metric sample file")
    p.add_argument("--shape", required=True)
    p.add_argument("--step", default="1/2")
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_sample, sample=None)

    po = sub.add_parser("order", help="order compatibility")
    osub = po.add_subparsers(dest="subcommand", required=True)
    for name, func in (("compat", cmd_order_compat), ("interval", cmd_order_interval)):
        q = osub.add_parser(name)
        graph_opts(q)
        q.add_argument("--order", help="order file, or 'natural'")
        q.add_argument("--e", type=int, required=True)
        if name == "compat":
            q.add_argument("--cap", type=int, default=None)
        q.set_defaults(func=func)

    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        outcome, code = args.func(args)
    except InputError as exc:
        report = {
            "command": args.command,
            "error": str(exc),
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True, indent=2))
        return 2
    elapsed = round((time.monotonic() - started) * 1000.0, 3)
    report = {
        "command": args.command
        + ("." + args.subcommand if getattr(args, "subcommand", None) else ""),
        "inputs": _digest(args),
        "outcome": outcome,
        "timing_ms": elapsed if getattr(args, "timing", False) else None,
        "version": __version__,
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

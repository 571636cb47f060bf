"""Command-line surface.

Subcommands: regularity, analyze, sweep, staircase, betti.  JSON is the
default output (stable key order, so identical configs give byte-identical
bytes); --format table is for humans.  Exit code 0 iff no error or
assertion fired.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chains import spline_dim_formula, spline_dim_oracle
from .errors import SplineRegError
from .geometry import parse_complex, interior_stats
from .regularity import (
    check_2r_theorem,
    path_bounds,
    regularity_from_complex,
    regularity_one_edge,
)
from .staircase import build_q, colon_staircase, staircase_closed_form
from .syzygies import betti_oracle, buchberger_graph, syz2_closed_form, syz3_closed_form

SCHEMA = "spline-reg/1"
R_CAP = 24
AB_CAP = 16


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _check_caps(args, values, cap, what):
    if args.unsafe_no_cap:
        return
    for v in values:
        if v > cap:
            raise ValueError(f"{what} = {v} above the cap {cap}; pass --unsafe-no-cap to override")


def _emit(args, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        _print_table(payload)


def _print_table(payload, indent=0):
    pad = " " * indent
    if isinstance(payload, dict):
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _print_table(v, indent + 2)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _print_table(v, indent)
                print()
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{payload}")


def _graph_dict(graph):
    return {
        "nodes": [g.render() for g in graph.nodes],
        "edges": [
            {"pair": [i, j], "lcm": m.render()} for i, j, m in graph.edges
        ],
        "faces": [
            {"region": list(idx), "lcm": m.render()} for idx, m in graph.faces
        ],
    }


def cmd_regularity(args) -> dict:
    _check_caps(args, [args.r], R_CAP, "r")
    _check_caps(args, [args.a, args.b], AB_CAP, "a/b")
    if args.complex and not args.oracle:
        raise SplineRegError("--complex only feeds the chain-complex route; pass --oracle")
    if args.complex:
        with open(args.complex, "r", encoding="utf-8") as fh:
            c = parse_complex(fh.read())
        report = regularity_from_complex(c, args.r)
        if {report.a, report.b} != {args.a, args.b}:
            raise SplineRegError(
                f"complex has (a, b) = ({report.a}, {report.b}), flags say ({args.a}, {args.b})"
            )
    else:
        report = regularity_one_edge(args.a, args.b, args.r)
    payload = {"schema": SCHEMA, "command": "regularity", **report.to_json_dict()}
    if args.oracle and not report.vanishes:
        table = betti_oracle(report.in_q)
        q = build_q(args.a, args.b, args.r)
        payload["betti_confirms_syzygies"] = (
            table.multidegrees(1) == syz2_closed_form(q)
            and list(table.multidegrees(2))
            == sorted(syz3_closed_form(buchberger_graph(q.in_q)), key=lambda m: m.exponents(), reverse=True)
        )
    if not report.vanishes:
        payload["theorem_2r_holds"] = check_2r_theorem(report)
    return payload


def cmd_analyze(args) -> dict:
    _check_caps(args, [args.r], R_CAP, "r")
    with open(args.path, "r", encoding="utf-8") as fh:
        c = parse_complex(fh.read())
    stats = interior_stats(c, args.r)
    payload = {
        "schema": SCHEMA,
        "command": "analyze",
        "f_vector": [len(c.vertices), len(c.edges), len(c.triangles)],
        "interior_data": stats.to_json_dict(),
    }
    if len(stats.totally_interior) == 1 and len(c.interior_vertices) == 2:
        report = regularity_from_complex(c, args.r)
        payload["regularity"] = report.to_json_dict()
        if args.emit_graph and not report.vanishes:
            payload["buchberger_graph"] = _graph_dict(buchberger_graph(report.in_q))
    elif stats.totally_interior:
        pb = path_bounds(c, args.r, run_oracle=args.oracle)
        payload["path_bounds"] = pb.to_json_dict()
    else:
        payload["note"] = "no totally interior edges: H0 vanishes"
    if args.d is not None:
        dims = []
        for d in range(args.d + 1):
            entry = {"d": d, "dim_formula": spline_dim_formula(c, args.r, d)}
            if args.oracle:
                entry["dim_oracle"] = spline_dim_oracle(c, args.r, d)
                entry["agree"] = entry["dim_formula"] == entry["dim_oracle"]
            dims.append(entry)
        payload["spline_dimensions"] = dims
    return payload


def cmd_sweep(args) -> dict:
    a_range = _parse_range(args.a)
    b_range = _parse_range(args.b)
    r_range = _parse_range(args.r)
    _check_caps(args, r_range, R_CAP, "r")
    _check_caps(args, a_range + b_range, AB_CAP, "a/b")
    rows = []
    violations = []
    for a in a_range:
        for b in b_range:
            if b < a:
                continue
            for r in r_range:
                try:
                    rep = regularity_one_edge(a, b, r)
                    ok_2r = True if rep.vanishes else check_2r_theorem(rep)
                    rows.append(
                        {
                            "a": a,
                            "b": b,
                            "r": r,
                            "exact": rep.exact,
                            "lower": rep.lower,
                            "upper": rep.upper,
                            "zeta0": rep.zeta0,
                            "conjecture_2r": ok_2r,
                            "routes_agree": rep.routes_agree,
                        }
                    )
                    if not ok_2r or not rep.routes_agree:
                        violations.append(f"({a},{b},{r})")
                except (SplineRegError, AssertionError) as exc:
                    violations.append(f"({a},{b},{r}): {type(exc).__name__}: {exc}")
    return {
        "schema": SCHEMA,
        "command": "sweep",
        "rows": rows,
        "violations": violations,
        "summary": f"{len(rows)} cells, {len(violations)} violations",
    }


def cmd_staircase(args) -> dict:
    _check_caps(args, [args.r], R_CAP, "r")
    payload = {"schema": SCHEMA, "command": "staircase", "r": args.r}
    if args.s is not None:
        _check_caps(args, [args.s], AB_CAP - 1, "s")
        st = staircase_closed_form(args.r, args.s)
        cs = colon_staircase(st)
        payload.update(
            {
                "s": args.s,
                "lambda": list(st.lam),
                "initial_ideal": [g.render() for g in st.ideal("x").gens],
                "lambda_prime": list(cs.lam_prime),
                "i0": cs.i0,
                "colon_ideal": [g.render() for g in cs.ideal("x").gens],
            }
        )
        return payload
    if args.a is None or args.b is None:
        raise SplineRegError("staircase needs either --s or both --a and --b")
    _check_caps(args, [args.a, args.b], AB_CAP, "a/b")
    q = build_q(args.a, args.b, args.r)
    payload.update(
        {
            "a": q.a,
            "b": q.b,
            "lambda": list(staircase_closed_form(args.r, q.a - 1).lam),
            "eta": list(staircase_closed_form(args.r, q.b - 1).lam),
            "lambda_prime": list(q.colon1.lam_prime),
            "eta_prime": list(q.colon2.lam_prime),
            "i0": q.i0,
            "j0": q.j0,
            "l0": q.l0,
            "in_q": [g.render() for g in q.in_q.gens],
        }
    )
    if args.emit_graph and not q.is_trivial:
        graph = buchberger_graph(q.in_q)
        payload["buchberger_graph"] = _graph_dict(graph)
        payload["syz2"] = [m.render() for m in syz2_closed_form(q)]
        payload["syz3"] = [m.render() for m in syz3_closed_form(graph)]
    return payload


def cmd_betti(args) -> dict:
    _check_caps(args, [args.r], R_CAP, "r")
    _check_caps(args, [args.a, args.b], AB_CAP, "a/b")
    q = build_q(args.a, args.b, args.r)
    payload = {
        "schema": SCHEMA,
        "command": "betti",
        "a": q.a,
        "b": q.b,
        "r": args.r,
        "in_q": [g.render() for g in q.in_q.gens],
    }
    table = betti_oracle(q.in_q)
    payload["betti"] = {
        str(i): [m.render() for m in table.multidegrees(i)] for i in (0, 1, 2)
    }
    if not q.is_trivial:
        graph = buchberger_graph(q.in_q)
        syz2 = syz2_closed_form(q)
        syz3 = syz3_closed_form(graph)
        payload["syz2_closed_form"] = [m.render() for m in syz2]
        payload["syz3_closed_form"] = [m.render() for m in syz3]
        payload["closed_forms_match_oracle"] = (
            table.multidegrees(1) == syz2
            and sorted(syz3, key=lambda m: m.exponents(), reverse=True)
            == list(table.multidegrees(2))
        )
    return payload


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spline-reg",
        description="Exact regularity of the spline homology module of planar complexes",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--unsafe-no-cap", action="store_true", help="lift the r/a/b caps")
    sub = p.add_subparsers(dest="command", required=True)

    reg = sub.add_parser("regularity", help="exact regularity from (a, b, r)", parents=[common])
    reg.add_argument("--a", type=int, required=True)
    reg.add_argument("--b", type=int, required=True)
    reg.add_argument("--r", type=int, required=True)
    reg.add_argument("--oracle", action="store_true")
    reg.add_argument("--complex", help="complex file for the chain-complex route")
    reg.set_defaults(func=cmd_regularity)

    an = sub.add_parser("analyze", help="analyze a complex file", parents=[common])
    an.add_argument("path")
    an.add_argument("--r", type=int, required=True)
    an.add_argument("--d", type=int, default=None, help="also print spline dimensions up to d")
    an.add_argument("--oracle", action="store_true")
    an.add_argument("--emit-graph", action="store_true")
    an.set_defaults(func=cmd_analyze)

    sw = sub.add_parser("sweep", help="sweep a grid of (a, b, r)", parents=[common])
    sw.add_argument("--a", required=True, help="range, e.g. 3..8")
    sw.add_argument("--b", required=True)
    sw.add_argument("--r", required=True)
    sw.set_defaults(func=cmd_sweep)

    st = sub.add_parser("staircase", help="staircases, colon staircases, In Q", parents=[common])
    st.add_argument("--r", type=int, required=True)
    st.add_argument("--s", type=int, default=None)
    st.add_argument("--a", type=int, default=None)
    st.add_argument("--b", type=int, default=None)
    st.add_argument("--emit-graph", action="store_true")
    st.set_defaults(func=cmd_staircase)

    be = sub.add_parser("betti", help="Betti table of In Q vs closed-form syzygies", parents=[common])
    be.add_argument("--a", type=int, required=True)
    be.add_argument("--b", type=int, required=True)
    be.add_argument("--r", type=int, required=True)
    be.set_defaults(func=cmd_betti)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except (SplineRegError, AssertionError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(args, payload)
    if isinstance(payload, dict) and payload.get("violations"):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

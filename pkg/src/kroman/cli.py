"""Batch command-line front-end.

Subcommands: gen, solve, verify, bound, reduce, construct, table.  Results
go to stdout as JSON (or CSV with --format csv); diagnostics go to stderr.
Exit codes: 0 success, 2 usage or parameter error, 3 budget exhausted (the
incumbent is still printed).  Output carries no timestamps, so identical
invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds as bounds_mod
from . import families
from .errors import KromanError
from .graph import (
    Graph,
    graph_stats,
    graph_to_edge_list_text,
    graph_to_json_dict,
    load_graph,
)
from .labeling import (
    labeling_from_json_dict,
    labeling_to_json_dict,
    verify_kirdf,
    verify_krdf,
    weight,
)
from .reduction import build_reduction
from .solvers import (
    SolveBudget,
    brute_force,
    is_independent_k_roman,
    solve_gamma,
    solve_gamma_krdf,
    solve_i,
    solve_i_krdf,
    solve_tau,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(obj, fmt: str = "json"):
    if fmt == "json":
        print(json.dumps(obj))
    else:
        raise KromanError(f"unsupported format {fmt!r} for this command")


def _emit_csv(header: list[str], rows: list[list[str]]):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _budget(args) -> SolveBudget:
    return SolveBudget(time_limit=args.time_limit, node_limit=args.node_limit)


def _add_budget_flags(p):
    p.add_argument("--time-limit", type=float, default=60.0)
    p.add_argument("--node-limit", type=int, default=10_000_000)
    p.add_argument("--threads", type=int, default=1)


def _witness_json(witness):
    if isinstance(witness, frozenset):
        return {"set": sorted(witness)}
    return labeling_to_json_dict(witness)


def _write_graph(g: Graph, fmt: str, out: str | None):
    if fmt == "edges":
        text = graph_to_edge_list_text(g)
    else:
        text = json.dumps(graph_to_json_dict(g)) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_graph(args) -> Graph:
    if args.family == "path":
        return families.path(args.n)
    if args.family == "cycle":
        return families.cycle(args.n)
    if args.family == "double-star":
        return families.double_star(args.left, args.right)
    if args.family == "p2xcycle":
        g, _, _ = families.p2_cycle_with_irdf(args.p, max(args.k or 1, 1))
        return g
    if args.family == "blanusa":
        return families.blanusa(families.BlanusaDescriptor(t=args.t, i=args.i))
    if args.family == "loupekine":
        return families.loupekine(_loupekine_descriptor(args))
    raise KromanError(f"unknown family {args.family!r}")


def _loupekine_descriptor(args) -> families.LoupekineDescriptor:
    if args.triples or args.pairs or args.plugs:
        plugs = (args.plugs or ",".join([families.LAMINAR] * args.ell)).split(",")
        triples = [tuple(map(int, t.split(","))) for t in args.triples.split(";")] if args.triples else []
        pairs = [tuple(map(int, p.split(","))) for p in args.pairs.split(";")] if args.pairs else []
        return families.descriptor(args.ell, plugs, triples, pairs)
    return families.lp0(args.ell, args.sigma)


def cmd_gen(args) -> int:
    g = _family_graph(args)
    _write_graph(g, args.format, args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    budget = _budget(args)
    problem = args.problem
    if problem in ("gkr", "ikr", "ikroman", "brute-rdf", "brute-irdf") and args.k is None:
        raise KromanError(f"--k is required for problem {problem!r}")
    if problem == "gkr":
        res = solve_gamma_krdf(g, args.k, budget, threads=args.threads)
    elif problem == "ikr":
        res = solve_i_krdf(g, args.k, budget, threads=args.threads)
    elif problem == "i":
        res = solve_i(g, budget, threads=args.threads)
    elif problem == "gamma":
        res = solve_gamma(g, budget, threads=args.threads)
    elif problem == "tau":
        res = solve_tau(g, budget, threads=args.threads)
    elif problem == "brute-rdf":
        res = brute_force(g, args.k, "RDF")
    elif problem == "brute-irdf":
        res = brute_force(g, args.k, "IRDF")
    elif problem == "ikroman":
        cls = is_independent_k_roman(g, args.k, budget)
        _emit({"independent_k_roman": cls.flag, "i_kr": cls.i_kr, "i": cls.i_val})
        return EXIT_OK
    else:
        raise KromanError(f"unknown problem {problem!r}")
    _emit(
        {
            "optimum": res.optimum,
            "proven_optimal": res.proven_optimal,
            "nodes": res.nodes_explored,
            "witness": _witness_json(res.witness),
        }
    )
    return EXIT_OK if res.proven_optimal else EXIT_BUDGET


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    with open(args.labeling, encoding="utf-8") as fh:
        f = labeling_from_json_dict(json.load(fh))
    if args.k is not None and args.k != f.k:
        raise KromanError(f"--k {args.k} disagrees with labeling file k={f.k}")
    report = verify_kirdf(g, f) if args.mode == "irdf" else verify_krdf(g, f)
    _emit(
        {
            "valid": report.valid,
            "mode": args.mode,
            "weight": weight(f),
            "violations": [
                {"vertex": v.vertex, "kind": v.kind, "detail": v.detail}
                for v in report.violations
            ],
            "notes": list(getattr(report, "notes", ())),
        }
    )
    return EXIT_OK


def _bound_reports(args) -> list[bounds_mod.BoundReport]:
    if args.family == "blanusa":
        return bounds_mod.blanusa_bounds(args.t, args.i, args.k)
    if args.family == "loupekine":
        return bounds_mod.loupekine_bounds(args.ell, args.sigma, args.k, args.variant)
    if args.graph:
        g = load_graph(args.graph)
        st = graph_stats(g)
        return [
            bounds_mod.lb_degree(
                st.n, st.max_degree, args.k, st.is_connected, st.n > 1
            )
        ]
    raise KromanError("pass --family blanusa/loupekine or --graph FILE")


def cmd_bound(args) -> int:
    reports = _bound_reports(args)
    if args.format == "csv":
        _emit_csv(bounds_mod.CSV_HEADER, [r.to_csv_row() for r in reports])
    else:
        _emit([r.to_json_dict() for r in reports])
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = load_graph(args.graph)
    r = build_reduction(g, args.k, allow_small_k=args.allow_small_k)
    gadget_map = {
        f"{u}~{v}": {"u": info.u, "v": info.v, "x": list(info.xs)}
        for (u, v), info in sorted(r.edge_gadget_map.items())
    }
    _emit(
        {
            "k": r.k,
            "source_vertices": r.source.n,
            "source_edges": r.source.m,
            "product_vertices": r.product.n,
            "product_edges": r.product.m,
            "notes": list(r.notes),
            "graph": graph_to_json_dict(r.product),
            "gadget_map": gadget_map,
        }
    )
    return EXIT_OK


_CONSTRUCTORS = {
    "p2xcycle": lambda a: families.p2_cycle_with_irdf(a.p, a.k),
    "blanusa-irdf": lambda a: _with_graph(
        families.blanusa(families.BlanusaDescriptor(t=a.t, i=a.i)),
        families.blanusa_special_irdf(families.BlanusaDescriptor(t=a.t, i=a.i), a.k),
    ),
    "lp1-irdf": lambda a: _with_graph(
        families.loupekine(_loupekine_descriptor(a)),
        families.lp1_irdf(_loupekine_descriptor(a), a.k),
    ),
    "lp0-irdf": lambda a: _with_graph(
        families.loupekine(_loupekine_descriptor(a)),
        families.lp0_irdf(_loupekine_descriptor(a), a.k),
    ),
    "lp0-krdf": lambda a: _with_graph(
        families.loupekine(_loupekine_descriptor(a)),
        families.lp0_krdf(_loupekine_descriptor(a), a.k),
    ),
}


def _with_graph(g, pair):
    f, predicted = pair
    return g, f, predicted


def cmd_construct(args) -> int:
    g, f, predicted = _CONSTRUCTORS[args.family](args)
    verifier = verify_krdf if args.family == "lp0-krdf" else verify_kirdf
    report = verifier(g, f)
    if args.graph_out:
        _write_graph(g, "edges" if args.graph_out.endswith(".edges") else "json",
                     args.graph_out)
    if args.labeling_out:
        with open(args.labeling_out, "w", encoding="utf-8") as fh:
            json.dump(labeling_to_json_dict(f), fh)
            fh.write("\n")
    _emit(
        {
            "family": args.family,
            "predicted_weight": predicted,
            "weight": weight(f),
            "valid": report.valid,
            "vertices": g.n,
        }
    )
    return EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    return [int(x) for x in text.split(",") if x.strip()]


TABLE_HEADER = [
    "family", "t", "i", "ell", "sigma", "variant", "k", "n",
    "construct_weight", "construct_valid", "lower", "upper", "exact",
    "solved", "agree",
]


def _table_rows_blanusa(args, budget) -> list[list[str]]:
    rows = []
    for t in _parse_int_list(args.t):
        for i in _parse_int_list(args.i):
            for k in _parse_int_list(args.k):
                d = families.BlanusaDescriptor(t=t, i=i)
                g = families.blanusa(d)
                f, predicted = families.blanusa_special_irdf(d, k)
                valid = verify_kirdf(g, f).valid
                reports = {r.bound_name: r for r in bounds_mod.blanusa_bounds(t, i, k)}
                lower = reports["lower_i_kr"].value
                upper = reports["upper_i_kr"].value
                exact = reports["exact_i_kr"].value
                solved = ""
                agree = valid and weight(f) == predicted and (
                    upper is None or predicted <= upper
                )
                if args.solve:
                    res = solve_i_krdf(g, k, budget)
                    solved = str(res.optimum)
                    agree = agree and res.proven_optimal and (
                        (exact is None or res.optimum == exact)
                        and (lower is None or res.optimum >= lower)
                        and (upper is None or res.optimum <= upper)
                    )
                rows.append(
                    ["blanusa", str(t), str(i), "", "", "", str(k), str(g.n),
                     str(weight(f)), str(valid).lower(),
                     "" if lower is None else str(lower),
                     "" if upper is None else str(upper),
                     "" if exact is None else str(exact),
                     solved, str(agree).lower()]
                )
    return rows


def _table_rows_loupekine(args, budget) -> list[list[str]]:
    rows = []
    for ell in _parse_int_list(args.ell):
        for sigma in _parse_int_list(args.sigma):
            if sigma > ell // 3:
                continue
            for k in _parse_int_list(args.k):
                d = families.lp0(ell, sigma)
                g = families.loupekine(d)
                f, predicted = families.lp0_irdf(d, k)
                valid = verify_kirdf(g, f).valid
                reports = {
                    r.bound_name: r
                    for r in bounds_mod.loupekine_bounds(ell, sigma, k, "LP0")
                }
                lower = reports["lower_i_kr"].value
                upper = reports["upper_i_kr"].value
                agree = valid and weight(f) == predicted and predicted <= upper
                rows.append(
                    ["loupekine", "", "", str(ell), str(sigma), "LP0", str(k),
                     str(g.n), str(weight(f)), str(valid).lower(),
                     "" if lower is None else str(lower), str(upper), "",
                     "", str(agree).lower()]
                )
    return rows


def cmd_table(args) -> int:
    budget = _budget(args)
    if args.family == "blanusa":
        rows = _table_rows_blanusa(args, budget)
    else:
        rows = _table_rows_loupekine(args, budget)
    _emit_csv(TABLE_HEADER, rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kroman",
        description="Exact solving, verification, bounds, and constructions "
        "for [k]-Roman and independent [k]-Roman domination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph")
    p.add_argument("--family", required=True,
                   choices=["path", "cycle", "double-star", "p2xcycle", "blanusa",
                            "loupekine"])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--left", type=int, default=3)
    p.add_argument("--right", type=int, default=3)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--ell", type=int, default=5)
    p.add_argument("--sigma", type=int, default=1)
    p.add_argument("--plugs", default="")
    p.add_argument("--triples", default="")
    p.add_argument("--pairs", default="")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=["edges", "json"], default="edges")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="run an exact solver on a graph file")
    p.add_argument("--problem", required=True,
                   choices=["gkr", "ikr", "i", "gamma", "tau", "ikroman",
                            "brute-rdf", "brute-irdf"])
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=None)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="verify a labeling file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", choices=["rdf", "irdf"], default="irdf")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="closed-form bound reports")
    p.add_argument("--family", choices=["blanusa", "loupekine"], default=None)
    p.add_argument("--graph", default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--ell", type=int, default=5)
    p.add_argument("--sigma", type=int, default=1)
    p.add_argument("--variant", choices=["LP0", "LP1"], default="LP0")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("reduce", help="build the edge-gadget product graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--allow-small-k", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("construct", help="emit a construction with its labeling")
    p.add_argument("--family", required=True, choices=sorted(_CONSTRUCTORS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--ell", type=int, default=5)
    p.add_argument("--sigma", type=int, default=1)
    p.add_argument("--plugs", default="")
    p.add_argument("--triples", default="")
    p.add_argument("--pairs", default="")
    p.add_argument("--graph-out", default=None)
    p.add_argument("--labeling-out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="grid reproduction table as CSV")
    p.add_argument("--family", required=True, choices=["blanusa", "loupekine"])
    p.add_argument("--t", default="1,2")
    p.add_argument("--i", default="1,2,3")
    p.add_argument("--ell", default="3,5")
    p.add_argument("--sigma", default="1")
    p.add_argument("--k", default="2,4")
    p.add_argument("--solve", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KromanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``spexlab <subcommand> ...``.

Exit status is 0 on success, 1 when a verification check fails and 2 on
usage or input errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bounds, constructions
from .constructions import CycleSpec
from .enumeration import EnumFilter, default_workers, enumerate_graphs, stream_graph6, write_graph6
from .extremal import ex_search, report_table, spex_search, spex_search_forbidden_graph
from .graph import GraphError
from .graph6 import graph6_decode, graph6_encode
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, power_iteration
from .subgraph import contains_intersecting_even_cycles, contains_subgraph
from . import verify as V

SCHEMA = 1


class UsageError(Exception):
    pass


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _spec(text: str) -> CycleSpec:
    try:
        return CycleSpec.parse(text)
    except GraphError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _n_range(text: str) -> list[int]:
    # "7", "5..9" or "5,7,9"
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}") from None


def _workers(args) -> int:
    return args.workers if args.workers else default_workers()


def _graphs(args):
    return stream_graph6(args.input)


# -- subcommands ----------------------------------------------------------


def cmd_construct(args, out) -> int:
    fam = args.family
    need = {"S": ("n", "k"), "S+": ("n", "k"), "F": ("n", "k"), "K": ("a", "b"), "Kp": ("a", "b"),
            "Km": ("a", "b"), "M": ("k",), "cycles": ("spec",), "cycle": ("n",), "path": ("n",), "complete": ("n",)}[fam]
    missing = [f"--{x}" for x in need if getattr(args, x) is None]
    if missing:
        raise UsageError(f"family {fam} needs {' '.join(missing)}")
    if fam in ("S", "S+", "F"):
        g = constructions.FAMILIES[fam](args.n, args.k)
    elif fam in ("K", "Kp", "Km"):
        g = constructions.FAMILIES[fam](args.a, args.b)
    elif fam == "M":
        g = constructions.make_matching(args.k)
    elif fam == "cycles":
        g = constructions.make_intersecting_even_cycles(args.spec)
    else:
        g = {"cycle": constructions.make_cycle, "path": constructions.make_path,
             "complete": constructions.make_complete}[fam](args.n)
    out.write(graph6_encode(g) + "\n")
    return 0


def cmd_spectrum(args, out) -> int:
    records = []
    for g in _graphs(args):
        res = power_iteration(g, args.tol, args.max_iter)
        rec = {"n": g.n, "lambda": res.lam, "residual": res.residual, "iterations": res.iterations,
               "converged": res.converged}
        if args.perron:
            rec["perron"] = res.perron.tolist()
        records.append(rec)
    if args.format == "json":
        _dump({"schema": SCHEMA, "results": records}, out)
        return 0
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "lambda", "residual", "iterations", "converged"] + (["perron"] if args.perron else []))
    for r in records:
        row = [r["n"], repr(r["lambda"]), repr(r["residual"]), r["iterations"], r["converged"]]
        if args.perron:
            row.append(";".join(repr(x) for x in r["perron"]))
        w.writerow(row)
    return 0


def _forbidden(args):
    if (args.spec is None) == (args.forbidden is None):
        raise UsageError("give exactly one of --spec and --forbidden")
    return args.spec if args.spec is not None else graph6_decode(args.forbidden)


def cmd_check_free(args, out) -> int:
    f = _forbidden(args)
    for lineno, g in enumerate(_graphs(args), 1):
        if isinstance(f, CycleSpec):
            w = contains_intersecting_even_cycles(g, f)
            wit = w.to_dict() if w else None
        else:
            m = contains_subgraph(g, f) if f.n <= g.n else None
            wit = {"mapping": [m[v] for v in range(f.n)]} if m is not None else None
        rec = {"graph": graph6_encode(g), "line": lineno, "free": wit is None}
        if args.witness and wit is not None:
            rec["witness"] = wit
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    return 0


def cmd_enum(args, out) -> int:
    freeness = None
    if args.spec is not None or args.forbidden is not None:
        freeness = _forbidden(args)
    flt = EnumFilter(connected_only=args.connected, min_edges=args.min_edges, max_edges=args.max_edges,
                     freeness=freeness)
    write_graph6(enumerate_graphs(args.n, flt, _workers(args), prune=not args.no_prune), out)
    return 0


def _emit_report(rep, args, out) -> int:
    if args.format == "json":
        _dump(rep.to_dict(), out)
    else:
        out.write(report_table(rep) + "\n")
    return 0


def cmd_ex_search(args, out) -> int:
    graphs = _graphs(args) if args.input else None
    return _emit_report(ex_search(args.n, args.spec, _workers(args), graphs=graphs), args, out)


def cmd_spex_search(args, out) -> int:
    f = _forbidden(args)
    if isinstance(f, CycleSpec):
        graphs = _graphs(args) if args.input else None
        rep = spex_search(args.n, f, _workers(args), maximal_only=not args.all_graphs, graphs=graphs)
    else:
        rep = spex_search_forbidden_graph(args.n, f, _workers(args), maximal_only=False if args.all_graphs else None)
    return _emit_report(rep, args, out)


def cmd_bounds(args, out) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(bounds.TABLE_HEADER)
    w.writerows(bounds.bound_table(args.n, args.spec))
    out.write(f"# aks_bound: {bounds.AKS_NOTE}\n")
    return 0


def cmd_verify(args, out) -> int:
    claim = args.claim
    spec = args.spec[0] if args.spec else None
    workers = _workers(args)

    def need(*names):
        for name in names:
            if (name == "spec" and spec is None) or (name != "spec" and getattr(args, name) is None):
                raise UsageError(f"claim {claim} needs --{name.replace('_', '-')}")

    if claim == "all":
        recs = V.default_suite(workers)
    elif claim == "kab-containment":
        need("spec")
        recs = [V.verify_kab_containment(spec)]
    elif claim == "almost-bipartite":
        need("spec")
        recs = [V.verify_almost_bipartite(spec)]
    elif claim == "degree-squares":
        need("spec", "nmax")
        recs = [V.verify_degree_squares(args.nmax, spec, workers)]
    elif claim == "disjoint-paths":
        need("spec", "n")
        recs = [V.verify_disjoint_paths(args.trials, args.n[0], spec, args.seed)]
    elif claim == "main-theorems":
        need("spec", "n")
        recs = V.verify_main_theorems(args.n, spec, workers)
    elif claim == "lambda-bounds":
        need("spec", "n")
        recs = [V.verify_lambda_bounds([(n, s) for s in args.spec for n in args.n])]
    elif claim == "minor-freeness":
        need("spec", "n")
        recs = [V.verify_minor_freeness(spec, args.n[0])]
    else:  # small-subgraph
        need("spec", "n", "h")
        recs = [V.verify_small_subgraph(graph6_decode(args.h), spec, args.n[0], workers)]
    payload = [r.to_dict(include_runtime=args.runtime) for r in recs]
    text = json.dumps({"schema": SCHEMA, "records": payload}, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 1 if any(r.verdict == V.FAIL for r in recs) else 0


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spexlab", description="Spectral extremal experiments for intersecting even cycles.")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $SPEXLAB_WORKERS, else all cores)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="print a named graph as graph6")
    c.add_argument("--family", required=True,
                   choices=["S", "S+", "F", "K", "Kp", "Km", "M", "cycles", "cycle", "path", "complete"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--spec", type=_spec, help="k values, e.g. 2,3 for C_{4,6}")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("spectrum", help="spectral radius of graph6 input")
    s.add_argument("--input", default="-", help="graph6 file, '-' for stdin")
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    s.add_argument("--perron", action="store_true", help="include the Perron vector")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_spectrum)

    f = sub.add_parser("check-free", help="per-graph freeness verdicts as JSON lines")
    f.add_argument("--input", default="-")
    f.add_argument("--spec", type=_spec)
    f.add_argument("--forbidden", help="graph6 of an explicit forbidden graph")
    f.add_argument("--witness", action="store_true")
    f.set_defaults(func=cmd_check_free)

    e = sub.add_parser("enum", help="all graphs on n vertices up to isomorphism")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--connected", action="store_true")
    e.add_argument("--min-edges", type=int)
    e.add_argument("--max-edges", type=int)
    e.add_argument("--spec", type=_spec)
    e.add_argument("--forbidden")
    e.add_argument("--no-prune", action="store_true", help="filter after generating every class")
    e.set_defaults(func=cmd_enum)

    x = sub.add_parser("ex-search", help="maximum edge count of free graphs")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--spec", type=_spec, required=True)
    x.add_argument("--input", help="search an external graph6 stream instead of enumerating")
    x.add_argument("--format", choices=["json", "table"], default="table")
    x.set_defaults(func=cmd_ex_search)

    sp = sub.add_parser("spex-search", help="maximum spectral radius of free graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--spec", type=_spec)
    sp.add_argument("--forbidden")
    sp.add_argument("--input")
    sp.add_argument("--all-graphs", action="store_true", help="score every free graph, not just maximal ones")
    sp.add_argument("--format", choices=["json", "table"], default="table")
    sp.set_defaults(func=cmd_spex_search)

    b = sub.add_parser("bounds", help="CSV table of closed-form bounds")
    b.add_argument("--n", type=_n_range, required=True)
    b.add_argument("--spec", type=_spec, action="append", required=True)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run a named claim check")
    v.add_argument("--claim", required=True, choices=list(V.CLAIMS) + ["all"])
    v.add_argument("--spec", type=_spec, action="append")
    v.add_argument("--n", type=_n_range)
    v.add_argument("--nmax", type=int)
    v.add_argument("--trials", type=int, default=10**4)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--h", help="graph6 of the forbidden subgraph (small-subgraph)")
    v.add_argument("--output")
    v.add_argument("--runtime", action="store_true", help="include runtimes (output no longer byte-stable)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.workers is not None and args.workers < 1:
        print("spexlab: --workers must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (UsageError, GraphError, OSError) as e:
        print(f"spexlab: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

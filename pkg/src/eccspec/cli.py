"""Command line front end: ``eccspec <command> ...``.

Commands
--------
compute    eccentricity matrix, distance matrix, eccentric degrees, indices
spectrum   eps-spectrum, spectral radius, energy, exact char poly, determinant
bounds     spectral radius against every lower bound
generate   trees / connected graphs / a family, as graph6 lines
verify     run named checks (or ``--all``); exit code 0 iff all pass
search     equienergetic, non-cospectral pairs of a given order

Graph input (one source): ``--family name:params``, ``--graph6 CODE`` (``-``
reads graph6 lines from stdin), or ``--file PATH`` (edge list, or graph6 lines
when the suffix is ``.g6``).  With no source, graph6 lines are read from
stdin.  Family grammar: ``star:5``, ``path:4``, ``cycle:6``, ``complete:5``,
``complete_bipartite:2,3``, ``multipartite:2,2,2``, ``crown:4``,
``random_connected:n,p,seed``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Iterable, Sequence

from . import verify as V
from .config import DEFAULTS
from .eccmatrix import epsilon_profile, graph_matrices, is_diametrical
from .generators import (
    EnumerationLimitError,
    all_connected_graphs,
    all_trees,
    cached_corpus,
    make_family,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .spectra import char_poly_exact, determinant_exact, eigenvalues_sym, quotient_bound_max

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# input


def _read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def load_graphs(args: argparse.Namespace, stdin=None) -> list[Graph]:
    sources = [s for s in ("family", "graph6", "file") if getattr(args, s, None)]
    if len(sources) > 1:
        raise UsageError("give exactly one of --family, --graph6, --file")
    stdin = stdin if stdin is not None else sys.stdin
    if not sources or args.graph6 == "-":
        return _read_graph6_lines(stdin.read())
    if args.family:
        return [make_family(args.family)]
    if args.graph6:
        return [parse_graph6(args.graph6)]
    path = Path(args.file)
    text = path.read_text()
    if path.suffix == ".g6":
        return _read_graph6_lines(text)
    return [parse_edge_list(text)]


def parse_range(text: str) -> list[int]:
    """``"5"`` -> [5]; ``"5..10"`` -> [5, ..., 10]."""
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or A..B") from None


# --------------------------------------------------------------------------
# output


def _cell(value) -> str:
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value)
    return str(value)


def render(records: list[dict], fmt: str) -> str:
    """Render records as ``table``, ``json`` or ``csv`` (same fields in each)."""
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        keys: list[str] = []
        for rec in records:
            keys.extend(k for k in rec if k not in keys)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: _cell(rec.get(k, "")) for k in keys})
        return buf.getvalue()
    blocks = []
    for rec in records:
        width = max(len(k) for k in rec)
        lines = []
        for key, value in rec.items():
            if isinstance(value, list) and value and isinstance(value[0], list):
                lines.append(f"{key.ljust(width)} :")
                cw = max(len(_fmt_scalar(x)) for row in value for x in row)
                lines.extend(" " * (width + 3) + " ".join(_fmt_scalar(x).rjust(cw) for x in row) for row in value)
            else:
                lines.append(f"{key.ljust(width)} : {_fmt_scalar(value) if not isinstance(value, (list, dict)) else _cell(value)}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _fmt_scalar(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def emit(records: list[dict], args: argparse.Namespace, out=None) -> None:
    text = render(records, args.format)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        (out or sys.stdout).write(text)


# --------------------------------------------------------------------------
# commands


def compute_record(g: Graph) -> dict:
    met, dist, eps = graph_matrices(g)
    prof = epsilon_profile(g, eps, dist)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "diameter": met.diam,
        "radius": met.rad,
        "eccentricities": list(met.ecc),
        "eps_matrix": eps.to_lists(),
        "distance_matrix": dist.to_lists(),
        "eps_degrees": list(prof.degrees),
        "eps_wiener": prof.wiener,
        "wiener": prof.classic_wiener,
        "diametrical": is_diametrical(met),
        "eps_regular": prof.is_regular,
    }


def spectrum_record(g: Graph, which: str = "eps") -> dict:
    _, dist, eps = graph_matrices(g)
    mat = eps if which == "eps" else dist
    spec = eigenvalues_sym(mat)
    poly = char_poly_exact(mat)
    d = spec.to_dict()
    return {
        "graph6": to_graph6(g),
        "matrix": which,
        "n": g.n,
        "eigenvalues": d["values"],
        "multiplicities": d["groups"],
        "spectral_radius": d["radius"],
        "energy": d["energy"],
        "char_poly": poly.to_strings(),
        "char_poly_text": str(poly),
        "determinant": str(determinant_exact(mat)),
    }


def bounds_record(g: Graph) -> dict:
    data = V.GraphData(g)
    prof = data.profile
    rho = data.rho
    tol = DEFAULTS.equality_tol
    mean = 2 * prof.wiener / g.n
    mu, argmax = quotient_bound_max(prof) if g.n >= 2 else (0.0, 0)
    rec = {
        "graph6": data.code,
        "n": g.n,
        "rho_eps": round(rho, 12),
        "rho_distance": round(data.dist_spectrum.radius, 12),
        "diameter": data.metric.diam,
        "diameter_bound_ok": rho >= data.metric.diam - tol,
        "wiener_bound": round(mean, 12),
        "wiener_bound_ok": rho >= mean - tol,
        "quotient_bound": round(mu, 12),
        "quotient_vertex": argmax + 1,
        "quotient_bound_ok": rho >= mu - tol,
    }
    if data.metric.diam == 2:
        eq1 = V.eq1_expression(g.n, prof.m, prof.k)
        rec["eq1_bound"] = str(eq1)
        rec["eq1_bound_ok"] = rho >= float(eq1) - tol
    return rec


def cmd_compute(args, out=None) -> int:
    emit([compute_record(g) for g in load_graphs(args)], args, out)
    return EXIT_OK


def cmd_spectrum(args, out=None) -> int:
    emit([spectrum_record(g, args.matrix) for g in load_graphs(args)], args, out)
    return EXIT_OK


def cmd_bounds(args, out=None) -> int:
    recs = [bounds_record(g) for g in load_graphs(args)]
    emit(recs, args, out)
    ok = all(v for r in recs for k, v in r.items() if k.endswith("_ok"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_generate(args, out=None) -> int:
    out = out or sys.stdout
    if args.kind == "family":
        if not args.spec:
            raise UsageError("generate family needs a family spec, e.g. star:5")
        graphs: Iterable[Graph] = [make_family(args.spec)]
    else:
        if not args.spec:
            raise UsageError(f"generate {args.kind} needs an order N or range A..B")
        orders = parse_range(args.spec)
        if args.cache:
            graphs = [g for n in orders for g in cached_corpus(args.kind, n, args.cache, args.allow_n8)]
        elif args.kind == "trees":
            graphs = (g for n in orders for g in all_trees(n))
        else:
            graphs = (g for n in orders for g in all_connected_graphs(n, args.allow_n8))
    lines = "".join(to_graph6(g) + "\n" for g in graphs)
    if args.out:
        Path(args.out).write_text(lines)
    else:
        out.write(lines)
    return EXIT_OK


_DEFAULT_ORDERS = {
    "star-invertibility": "2..10",
    "diam2-max": "4..7",
    "equienergetic": "3..7",
}


def run_checks(args, stdin=None) -> list[V.CheckReport]:
    ids = list(V.CHECK_IDS) if args.all else args.checks
    if not ids:
        raise UsageError("name at least one check or pass --all")
    unknown = [c for c in ids if c not in V.CHECK_IDS]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(V.CHECK_IDS)}")
    explicit = None
    if args.family or args.graph6 or args.file:
        explicit = load_graphs(args, stdin)
    jobs = args.jobs
    reports = []
    for cid in ids:
        print(f"[eccspec] running {cid}", file=sys.stderr)
        if args.n:
            orders = parse_range(args.n)
        elif args.exhaustive:
            orders = list(range(1, args.exhaustive + 1))
        else:
            orders = parse_range(_DEFAULT_ORDERS.get(cid, f"1..{DEFAULTS.max_graph_order}"))
        if explicit is not None:
            universe, graphs = "given graphs", explicit
        else:
            universe, graphs = None, None

        def universe_graphs():
            if graphs is not None:
                return universe, graphs
            return V.connected_universe(min(orders), max(orders), args.allow_n8)

        if cid == "star-invertibility":
            if graphs is not None:
                reports.append(V.check_star_invertibility(graphs=graphs, jobs=jobs))
            else:
                reports.append(V.check_star_invertibility(min(orders), max(orders), jobs=jobs))
        elif cid == "diam2-max":
            if graphs is not None:
                for n in sorted({g.n for g in graphs}):
                    reports.append(V.check_diam2_max(n, graphs=graphs, jobs=jobs))
            else:
                reports.extend(V.check_diam2_max(n, jobs=jobs) for n in orders)
        elif cid == "equienergetic":
            if graphs is not None:
                for n in sorted({g.n for g in graphs}):
                    reports.append(V.search_equienergetic(n, graphs=graphs, jobs=jobs))
            else:
                reports.extend(V.search_equienergetic(n, jobs=jobs) for n in orders)
        elif cid == "bipartite-min":
            reports.append(V.check_bipartite_min(args.half_n, args.allow_n8, jobs=jobs))
        elif cid == "partite-energy":
            samples = V.random_multipartite_specs(args.samples, args.seed, args.max_parts_n)
            reports.append(V.check_partite_energy(args.p_max, samples, jobs=jobs))
        else:
            fn = {
                "radius-lower-bound": V.check_radius_lower_bound,
                "wiener-bound": V.check_wiener_bound,
                "eq1-bound": V.check_eq1_bound,
                "quotient-bound": V.check_quotient_bound,
                "domination": V.check_domination,
            }[cid]
            desc, pool = universe_graphs()
            reports.append(fn(pool, desc, jobs=jobs))
    return reports


def report_records(reports: Sequence[V.CheckReport], scrub_time: bool = False) -> list[dict]:
    return [r.to_dict(scrub_time) for r in reports]


def cmd_verify(args, out=None, stdin=None) -> int:
    reports = run_checks(args, stdin)
    out = out or sys.stdout
    if args.format == "table" and not args.out:
        for r in reports:
            out.write(r.summary_line() + "\n")
            for cex in r.counterexamples[:10]:
                out.write(f"      counterexample {cex['graph6']}: expected {cex['expected']}, got {cex['actual']}\n")
    else:
        emit(report_records(reports, args.scrub_time), args, out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_search(args, out=None) -> int:
    args.checks = ["equienergetic"]
    args.all = False
    reports = run_checks(args)
    records = []
    for r in reports:
        for pair in r.details["pairs"]:
            records.append({
                "n": r.details["n"],
                "graph6_a": pair["graph6"][0],
                "graph6_b": pair["graph6"][1],
                "energy": pair["energy"],
                "kind": pair["kind"],
                "spectrum_a": pair["spectra"][0],
                "spectrum_b": pair["spectra"][1],
            })
    if records or args.format != "table":
        emit(records, args, out)
    else:
        (out or sys.stdout).write("no non-cospectral equienergetic pairs\n")
    for r in reports:
        print(r.summary_line(), file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# --------------------------------------------------------------------------
# parser


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family spec, e.g. star:5 or complete_bipartite:2,3")
    p.add_argument("--graph6", help="graph6 string ('-' reads lines from stdin)")
    p.add_argument("--file", help="edge-list file (or .g6 file of graph6 lines)")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eccspec",
        description=__doc__.split("\n\n")[0],
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--equality-tol", type=float, help="tolerance for bound equalities (default 1e-9)")
    parser.add_argument("--energy-tol", type=float, help="energy bucket tolerance (default 1e-7)")
    parser.add_argument("--jacobi-tol", type=float, help="Jacobi convergence factor (default 1e-13)")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    parser.add_argument("--seed", type=int, default=0, help="seed for random samples")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="eccentricity matrix and indices")
    _add_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("spectrum", help="spectrum, radius, energy, char poly, det")
    _add_input(p)
    _add_output(p)
    p.add_argument("--matrix", choices=("eps", "distance"), default="eps")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", help="spectral radius against the lower bounds")
    _add_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="graph6 lines for trees, graphs or a family")
    p.add_argument("kind", choices=("trees", "graphs", "family"))
    p.add_argument("spec", nargs="?", help="order N, range A..B, or family spec")
    p.add_argument("--cache", help="directory for cached corpora")
    p.add_argument("--allow-n8", action="store_true", help="permit n=8 connected-graph enumeration (slow)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    for name, func in (("verify", cmd_verify), ("search", cmd_search)):
        p = sub.add_parser(name, help="run named checks" if name == "verify" else "equienergetic search")
        if name == "verify":
            p.add_argument("checks", nargs="*", metavar="CHECK", help=", ".join(V.CHECK_IDS))
            p.add_argument("--all", action="store_true", help="run every check at default scale")
            p.add_argument("--scrub-time", action="store_true", help="omit wall times (byte-stable JSON)")
        p.add_argument("--n", help="graph order N or range A..B")
        p.add_argument("--exhaustive", type=int, help="all connected graphs with n <= N")
        p.add_argument("--allow-n8", action="store_true")
        p.add_argument("--half-n", type=int, default=3)
        p.add_argument("--p-max", type=int, default=20)
        p.add_argument("--samples", type=int, default=50)
        p.add_argument("--max-parts-n", type=int, default=60)
        _add_input(p)
        _add_output(p)
        p.set_defaults(func=func, scrub_time=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = DEFAULTS.as_dict()
    try:
        DEFAULTS.override(
            equality_tol=args.equality_tol,
            energy_bucket_tol=args.energy_tol,
            jacobi_tol=args.jacobi_tol,
        )
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except DisconnectedGraphError as exc:
        print(f"eccspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, GraphFormatError, EnumerationLimitError, ValueError, OSError) as exc:
        print(f"eccspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        for key, value in saved.items():
            setattr(DEFAULTS, key, value)


if __name__ == "__main__":
    sys.exit(main())

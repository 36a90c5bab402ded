"""Command-line front end.

Subcommands: detect, search, verify, certify, lambda, construct, table.
Diagnostics go to stderr; data goes to --out files or stdout.  Exit codes:
0 success/found, 1 clean negative, 2 usage or I/O error, 3 internal
assertion (an exhaustively checked statement failed, which must never
happen).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import canon, lambdaopt, search
from .graphs import Graph6Error, GraphError, complete_bipartite, graph6_encode, half_graph

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_ASSERTION = 3


def _scrub_timing(obj):
    """Zero every ``seconds`` field so output files are byte-identical
    across repeated runs; wall-clock timing goes to stderr instead."""
    if isinstance(obj, dict):
        return {k: (0.0 if k == "seconds" else _scrub_timing(v))
                for k, v in obj.items()}
    if isinstance(obj, list):
        return [_scrub_timing(x) for x in obj]
    return obj


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _parse_range(spec: str) -> list[int]:
    """Parse '5', '5..9', or '5,7,9' into a list of ints."""
    out: list[int] = []
    for part in spec.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="degpath")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="find equal-degree paths in graph6 files")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--length", type=int, default=3)
    p.add_argument("--out")

    p = sub.add_parser("search", help="compute the extremal function p_ell(v)")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--length", type=int, default=3)
    p.add_argument("--min-edges", type=int, default=None,
                   help="restrict to graphs with at least this many edges")
    p.add_argument("--max-edges", type=int, default=None,
                   help="restrict to graphs with at most this many edges")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="verify extremal value and uniqueness at one order")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("certify", help="sweep certificate checks over property-free graphs")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("lambda", help="closed form vs oracle over the parameter grid")
    p.add_argument("--grid", default="n=6..8", help="half-order range, e.g. n=6..8")
    p.add_argument("--out")

    p = sub.add_parser("construct", help="emit a named construction as graph6")
    p.add_argument("--kind", choices=["complete-bipartite", "half-graph"], required=True)
    p.add_argument("--params", required=True, help="'a,b' for bipartite, 'n' for half graph")
    p.add_argument("--out")

    p = sub.add_parser("table", help="extremal table over (ell, v) pairs")
    p.add_argument("--lengths", required=True, help="e.g. 1,2,3")
    p.add_argument("--vertices", required=True, help="e.g. 4..8")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    return ap


def _cmd_detect(args) -> int:
    lines = []
    found = False
    for g6, w in search.detect_file(args.infile, args.length):
        entry = {"graph6": g6,
                 "witness": list(w.vertices) if w is not None else None}
        if w is not None:
            found = True
        lines.append(json.dumps(entry))
    _write("\n".join(lines) + "\n" if lines else "", args.out)
    return EXIT_OK if found else EXIT_NEGATIVE


def _cmd_search(args) -> int:
    canon.set_workers(args.jobs)
    edge_range = None
    if args.min_edges is not None or args.max_edges is not None:
        lo = args.min_edges if args.min_edges is not None else 0
        hi = (args.max_edges if args.max_edges is not None
              else args.vertices * (args.vertices - 1) // 2)
        edge_range = (lo, hi)
    result = search.compute_extremal(args.vertices, args.length,
                                     edge_range=edge_range)
    print(f"search: v={args.vertices} ell={args.length} "
          f"took {result.seconds:.2f}s", file=sys.stderr)
    _write(json.dumps(_scrub_timing(result.to_dict()), indent=2), args.out)
    if args.out:
        g6path = args.out.rsplit(".", 1)[0] + ".g6"
        with open(g6path, "w", encoding="ascii") as fh:
            fh.writelines(g6 + "\n" for g6 in result.extremal)
    return EXIT_OK


def _cmd_verify(args) -> int:
    canon.set_workers(args.jobs)
    report = search.verify_theorem(args.vertices)
    _write(json.dumps(_scrub_timing(report), indent=2), args.out)
    return EXIT_OK


def _cmd_certify(args) -> int:
    canon.set_workers(args.jobs)
    report = search.certificate_sweep(args.vertices)
    _write(report.to_json(indent=2), args.out)
    return EXIT_OK if report.total_violations == 0 else EXIT_ASSERTION


def _cmd_lambda(args) -> int:
    spec = args.grid
    if not spec.startswith("n="):
        raise GraphError(f"grid spec must look like n=6..8, got {spec!r}")
    n_values = _parse_range(spec[2:])
    rows = ["n,delta,beta,b_size,case,closed,oracle,equal"]
    all_equal = True
    for inst in lambdaopt.domain_grid(n_values):
        closed = lambdaopt.lambda_closed(inst)
        oracle = lambdaopt.lambda_bruteforce(inst)
        equal = closed == oracle
        all_equal = all_equal and equal
        rows.append(f"{inst.n},{inst.delta},{inst.beta},{inst.b_size},"
                    f"{inst.case},{closed},{oracle},{equal}")
    _write("\n".join(rows) + "\n", args.out)
    return EXIT_OK if all_equal else EXIT_ASSERTION


def _cmd_construct(args) -> int:
    params = [int(x) for x in args.params.split(",")]
    if args.kind == "complete-bipartite":
        if len(params) != 2:
            raise GraphError("complete-bipartite needs --params a,b")
        g = complete_bipartite(*params)
    else:
        if len(params) != 1:
            raise GraphError("half-graph needs --params n")
        g = half_graph(params[0])
    _write(graph6_encode(g) + "\n", args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    canon.set_workers(args.jobs)
    table = search.build_table(_parse_range(args.lengths), _parse_range(args.vertices))
    for row in table.rows:
        row.seconds = 0.0
    text = table.to_csv() if args.format == "csv" else table.to_json(indent=2)
    _write(text, args.out)
    return EXIT_OK


_COMMANDS = {
    "detect": _cmd_detect,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "certify": _cmd_certify,
    "lambda": _cmd_lambda,
    "construct": _cmd_construct,
    "table": _cmd_table,
}


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (GraphError, Graph6Error, lambdaopt.DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (search.TheoremViolation, AssertionError) as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERTION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

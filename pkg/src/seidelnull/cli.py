"""Command-line front end.

Exit status: 0 on success, 1 when a computation fails or a verification
check does not hold, 2 on usage errors (including malformed graph6).
Every flag can also be set through an environment variable named
``SEIDELNULL_<FLAG>``; an explicit flag wins.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from typing import List, Optional

from . import analysis as an
from .errors import Graph6Error, NoWitness, NotApplicable, SeidelError
from .families import FamilySpec
from .graph import VertexSet, degrees, odd_vertices, switch
from .graph6 import encode_graph6, parse_graph6
from .linalg import DEFAULT_PRIME, rank_exact, seidel_matrix
from .search import StageConfig, enumerate_trees, scan

ENV_PREFIX = "SEIDELNULL_"
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _env(name: str, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_flag(name: str) -> bool:
    return _env(name, "").lower() in ("1", "true", "yes", "on")


def _positive_int(flag):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag}: expected an integer, got {text!r}")
        if v < 1:
            raise argparse.ArgumentTypeError(f"{flag}: must be >= 1, got {v}")
        return v
    return conv


def _int(flag):
    def conv(text):
        try:
            return int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag}: expected an integer, got {text!r}")
    return conv


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--workers", type=_positive_int("--workers"), default=None)
    common.add_argument("--prime", type=_int("--prime"), default=None)
    common.add_argument("--seed", type=_int("--seed"), default=None)
    common.add_argument("--no-prefilter", action="store_true", default=None)
    common.add_argument("--no-modp", action="store_true", default=None)

    parser = _Parser(prog="seidelnull", description="Seidel matrix kernel toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("phi", parents=[common], help="primitive kernel vector of graph6 input")
    p.add_argument("graph6", nargs="?", help="graph6 string; omit (or pass --) to read stdin")

    p = sub.add_parser("analyze", parents=[common], help="filters, rank, phi and all checks")
    p.add_argument("graph6")

    p = sub.add_parser("family", parents=[common], help="build a family member")
    p.add_argument("name", help="G, H, p4 or cycle-leaves")
    p.add_argument("k", type=_int("k"))

    p = sub.add_parser("search-trees", parents=[common], help="scan all free trees of order n")
    p.add_argument("n", type=_int("n"))

    p = sub.add_parser("switch", parents=[common], help="switch a graph at a vertex set")
    p.add_argument("graph6")
    p.add_argument("vertices", nargs="?", default="",
                   help="comma-separated 0-based vertex list (empty for none)")

    p = sub.add_parser("verify-theorems", parents=[common], help="run the property suite")
    p.add_argument("--order", type=_positive_int("--order"), default=9)
    return parser


def _resolve(args) -> argparse.Namespace:
    """Fill unset flags from the environment, then defaults, and validate."""
    if args.format is None:
        args.format = _env("FORMAT", "text")
        if args.format not in FORMATS:
            raise UsageError(f"{ENV_PREFIX}FORMAT: invalid choice {args.format!r}")
    try:
        if args.workers is None:
            args.workers = int(_env("WORKERS", os.cpu_count() or 1))
        if args.prime is None:
            args.prime = int(_env("PRIME", DEFAULT_PRIME))
        if args.seed is None:
            args.seed = int(_env("SEED", 0))
    except ValueError as exc:
        raise UsageError(f"bad environment override: {exc}")
    if args.no_prefilter is None:
        args.no_prefilter = _env_flag("NO_PREFILTER")
    if args.no_modp is None:
        args.no_modp = _env_flag("NO_MODP")
    if args.workers < 1:
        raise UsageError("--workers: must be >= 1")
    try:
        args.stages = StageConfig(prefilter=not args.no_prefilter, modp=not args.no_modp,
                                  prime=args.prime, workers=args.workers)
    except ValueError as exc:
        raise UsageError(f"--prime: {exc}")
    return args


def _phi_str(vec) -> str:
    return " ".join(str(x) for x in vec)


def _emit(rows: List[dict], fmt: str, out, text_lines: Optional[List[str]] = None):
    if fmt == "json":
        json.dump(rows[0] if len(rows) == 1 else rows, out)
        out.write("\n")
    elif fmt == "csv":
        fields = list(rows[0]) if rows else []
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v)
                        for k, v in r.items()})
    else:
        for line in text_lines or []:
            out.write(line + "\n")


def _cmd_phi(args, out, stdin):
    if args.graph6 in (None, "-", "--"):
        lines = [ln for ln in stdin.read().splitlines() if ln.strip()]
    else:
        lines = [args.graph6]
    rows, text = [], []
    for ln in lines:
        g = parse_graph6(ln.strip())
        p = an.phi(g)
        rows.append({"graph6": ln.strip(), "singular": p is not None,
                     "phi": _phi_str(p.entries) if p else ""})
        text.append(_phi_str(p.entries) if p else "nonsingular")
    _emit(rows, args.format, out, text)
    return 0


def _try(fn, *a):
    try:
        return fn(*a)
    except (NotApplicable, NoWitness):
        return None


def _cmd_analyze(args, out, stdin):
    g = parse_graph6(args.graph6)
    verdict = an.prefilter_singularity(g)
    rank = rank_exact(seidel_matrix(g))
    p = an.phi(g)
    row = {
        "graph6": args.graph6,
        "order": g.n,
        "size": g.size(),
        "n_odd": len(odd_vertices(g)),
        "verdict": verdict.verdict.value,
        "order_ok": verdict.order_ok,
        "odd_size_ok": verdict.odd_size_ok,
        "even_size_ok": verdict.even_size_ok,
        "rank": rank,
        "phi": _phi_str(p.entries) if p else "",
        "pm_one": p.all_pm_one if p else None,
        "balance": an.check_kernel_balance(p) if p else None,
        "odd_entries": an.check_odd_entries(p) if p else None,
        "pair_congruences": an.check_pair_congruences(p).passed if p else None,
        "leaf_odd_count": _try(an.check_leaf_odd_count, g, p) if p else None,
        "tree_residues": _try(an.check_tree_residues, g, p) if p else None,
        "edge_bounds": _try(an.check_edge_bounds, g, p) if p else None,
        "regular_witness": "",
    }
    if p is not None and p.all_pm_one:
        row["regular_witness"] = ",".join(map(str, an.regular_switch_witness(p).members()))
    text = [f"{k}: {'n/a' if v is None else v}" for k, v in row.items()]
    _emit([row], args.format, out, text)
    return 0


def _cmd_family(args, out, stdin):
    spec = FamilySpec(args.name, args.k)
    g = spec.build()
    expected = spec.expected_phi()
    p = an.phi(g)
    computed = p.entries if p else ()
    row = {"family": spec.family, "k": spec.k, "order": g.n, "size": g.size(),
           "graph6": encode_graph6(g).decode("ascii"),
           "expected_phi": _phi_str(expected), "computed_phi": _phi_str(computed),
           "match": tuple(expected) == tuple(computed)}
    text = [row["graph6"], row["computed_phi"],
            f"expected {'=' if row['match'] else '!='} computed"]
    _emit([row], args.format, out, text)
    return 0 if row["match"] else 1


def _cmd_search(args, out, stdin):
    rep = scan(enumerate_trees(args.n), args.stages)
    d = rep.to_dict()
    if args.format == "json":
        json.dump(d, out)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["graph6", "pm_one", "phi"])
        for wit in d["witnesses"]:
            w.writerow([wit["graph6"], wit["pm_one"], " ".join(wit["phi"])])
    else:
        for key in ("order", "total", "prefilter_rejected", "modp_rejected",
                    "exact_checked", "singular", "pm_one", "wall_time"):
            out.write(f"{key:<20}{d[key]}\n")
        for wit in d["witnesses"]:
            tag = " +-1" if wit["pm_one"] else ""
            out.write(f"{wit['graph6']}  {' '.join(wit['phi'])}{tag}\n")
    return 0


def _cmd_switch(args, out, stdin):
    g = parse_graph6(args.graph6)
    try:
        members = [int(t) for t in args.vertices.split(",") if t.strip()]
        a = VertexSet.of(g.n, members)
    except ValueError as exc:
        raise UsageError(f"vertices: {exc}")
    h = switch(g, a)
    row = {"graph6": encode_graph6(h).decode("ascii"), "size": h.size(),
           "degrees": " ".join(map(str, degrees(h)))}
    _emit([row], args.format, out, [row["graph6"]])
    return 0


def _cmd_verify(args, out, stdin):
    from . import verify

    results = verify.run_suite(args.order, seed=args.seed, stages=args.stages)
    rows = [{"check": name, "passed": ok, "detail": detail} for name, ok, detail in results]
    text = [f"{'PASS' if ok else 'FAIL'}  {name}  {detail}" for name, ok, detail in results]
    _emit(rows, args.format, out, text)
    return 0 if all(ok for _, ok, _ in results) else 1


COMMANDS = {
    "phi": _cmd_phi,
    "analyze": _cmd_analyze,
    "family": _cmd_family,
    "search-trees": _cmd_search,
    "switch": _cmd_switch,
    "verify-theorems": _cmd_verify,
}


def run(argv=None, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = _resolve(parser.parse_args(argv))
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf, stdin)
    except (UsageError, Graph6Error) as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (SeidelError, ValueError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    out.write(buf.getvalue())
    return code


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()

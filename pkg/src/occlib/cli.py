"""Command line front end: cut tables for graphs, the verification
campaigns, family searches, and the measure bound calculator.

Exit codes: 0 when every requested claim holds, 1 when a verification
campaign reports a failing claim, 2 for usage or input errors.  All rational
output is exact, rendered as num/den.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from ._parallel import worker_count
from .cutstats import builtin_table, cut_distribution_blocks
from .exact import frac_str
from .families import (
    Family,
    agreement_cayley,
    hoffman_audit,
    is_triangle_intersecting,
    maximum_independent_sets,
    triangle_masks,
    umvirate,
    verify_family_claims,
)
from .graph import Graph, Graph6Error, parse_graph6, write_graph6
from .schur import verify_oldc_claims
from .spectra import (
    TAU,
    combined_lambda_by_mask,
    eval_lambda1_uniform,
    eval_lambda2_uniform,
    eval_lambda_combined,
    hoffman_bound,
    verify_skew_cases,
    verify_smallp,
    verify_uniform_claims,
)

__all__ = ["build_parser", "main"]


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------


def render_report(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["claim_id", "ok", "detail"])
        for check in payload["report"]["checks"]:
            writer.writerow([check["claim_id"],
                             "pass" if check["ok"] else "fail",
                             check["detail"]])
        return buf.getvalue()
    lines = [f"campaign {payload['campaign']} (occlib {payload['version']})"]
    for check in payload["report"]["checks"]:
        mark = "PASS" if check["ok"] else "FAIL"
        suffix = f"  {check['detail']}" if check["detail"] else ""
        lines.append(f"{mark} {check['claim_id']}{suffix}")
    certs = payload["report"]["certificates"]
    if certs:
        good = sum(1 for c in certs if c["status"] == "pass")
        lines.append(f"certificates: {good}/{len(certs)} pass")
    n = len(payload["report"]["checks"])
    lines.append(f"result: {'PASS' if payload['ok'] else 'FAIL'} ({n} checks)")
    lines.append(f"runtime: {payload['runtime_seconds']}s")
    return "\n".join(lines) + "\n"


def campaign_payload(argv: list[str], report, seed, runtime: float) -> dict:
    return {
        "campaign": report.name,
        "command": "occ " + " ".join(argv),
        "version": __version__,
        "seed": seed,
        "ok": report.ok,
        "report": report.to_json_dict(),
        "runtime_seconds": round(runtime, 3),
    }


def _finish_campaign(args, argv, report, seed, started) -> int:
    payload = campaign_payload(argv, report, seed, time.perf_counter() - started)
    _emit(render_report(payload, args.format), args.out)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# cutstat
# ---------------------------------------------------------------------------


def _cutstat_rows(args) -> list[dict]:
    rows = []
    if args.builtin:
        for name, g, dist in builtin_table():
            rows.append(_cutstat_row(name, g, dist))
        return rows
    lines: list[str] = []
    if args.files:
        for path in args.files:
            with open(path, encoding="ascii") as fh:
                lines.extend(fh.read().split())
    else:
        lines.extend(sys.stdin.read().split())
    for token in lines:
        g = parse_graph6(token)
        rows.append(_cutstat_row(token, g, cut_distribution_blocks(g)))
    return rows


def _cutstat_row(name: str, g: Graph, dist) -> dict:
    return {
        "name": name,
        "graph6": write_graph6(g),
        "vertices": g.v,
        "edges": g.edge_count,
        "q": [frac_str(p) for p in dist.probs],
        "lambda1": frac_str(eval_lambda1_uniform(g)),
        "lambda2": frac_str(eval_lambda2_uniform(g)),
        "combined": frac_str(eval_lambda_combined(g)),
    }


def cmd_cutstat(args, argv) -> int:
    rows = _cutstat_rows(args)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["name", "graph6", "vertices", "edges", "q",
                         "lambda1", "lambda2", "combined"])
        for r in rows:
            writer.writerow([r["name"], r["graph6"], r["vertices"], r["edges"],
                             " ".join(r["q"]), r["lambda1"], r["lambda2"],
                             r["combined"]])
        text = buf.getvalue()
    else:
        lines = []
        for r in rows:
            lines.append(f"{r['name']}  {r['graph6']}  v={r['vertices']} "
                         f"e={r['edges']}  q=[{', '.join(r['q'])}]  "
                         f"l1={r['lambda1']} l2={r['lambda2']} "
                         f"lc={r['combined']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify / schur
# ---------------------------------------------------------------------------


def cmd_verify(args, argv) -> int:
    started = time.perf_counter()
    seed = args.seed
    if args.claims == "uniform":
        report = verify_uniform_claims(workers=worker_count(args.workers))
        seed = None
    elif args.claims == "skew":
        report = verify_skew_cases(args.plo, args.phi)
        seed = None
    elif args.claims == "smallp":
        report = verify_smallp()
        seed = None
    elif args.claims == "schur":
        report = verify_oldc_claims(seed=seed)
    else:
        report = verify_family_claims(seed=seed, campaign_size=args.campaign_size)
    return _finish_campaign(args, argv, report, seed, started)


def cmd_schur(args, argv) -> int:
    started = time.perf_counter()
    report = verify_oldc_claims(seed=args.seed)
    return _finish_campaign(args, argv, report, args.seed, started)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def cmd_families(args, argv) -> int:
    if args.action == "max-independent":
        adj = agreement_cayley(4)
        alpha, sets = maximum_independent_sets(adj, seed=args.seed)
        fams = [Family(4, s) for s in sets]
        intersecting = sum(1 for f in fams if is_triangle_intersecting(f))
        payload = {
            "alpha": alpha,
            "maximum_sets": len(sets),
            "triangle_intersecting": intersecting,
            "sets": [sorted(s) for s in sets],
        }
        ok = True
    else:  # bound-check
        n = args.n
        table = combined_lambda_by_mask(n)
        lam_min = min(table.values())
        bound = hoffman_bound(lam_min)
        audits = [hoffman_audit(umvirate(n, t)) for t in triangle_masks(n)]
        dim = (len(table) - 1).bit_length()
        payload = {
            "n": n,
            "lambda_min": frac_str(lam_min),
            "nu": frac_str(bound.nu),
            "family_size_bound": str(2 ** dim * bound.nu),
            "umvirate_audits": [
                {k: (frac_str(v) if isinstance(v, Fraction) else v)
                 for k, v in audit.items()}
                for audit in audits
            ],
        }
        ok = all(a["ok"] and a["mu"] == a["nu"] == bound.nu for a in audits)
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for k, v in payload.items():
            writer.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
        text = buf.getvalue()
    else:
        lines = []
        for k, v in payload.items():
            if isinstance(v, list) and k == "sets":
                lines.append(f"{k}:")
                lines.extend("  " + " ".join(str(m) for m in s) for s in v)
            elif isinstance(v, list):
                lines.append(f"{k}:")
                lines.extend("  " + json.dumps(item) for item in v)
            else:
                lines.append(f"{k}: {v}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# hoffman
# ---------------------------------------------------------------------------


def cmd_hoffman(args, argv) -> int:
    try:
        bound = hoffman_bound(args.lambda_min, args.gap)
    except ValueError as exc:
        print(f"occ: {exc}", file=sys.stderr)
        return 2
    payload = bound.to_json_dict()
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(list(payload))
        writer.writerow(list(payload.values()))
        text = buf.getvalue()
    else:
        text = "\n".join(f"{k}: {v}" for k, v in payload.items()) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="occ",
        description="Exact verification of cut-statistic spectra and "
                    "intersecting-family bounds.",
    )
    parser.add_argument("--version", action="version",
                        version=f"occlib {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"),
                        default="text", help="output format")
    common.add_argument("--out", metavar="FILE",
                        help="write output to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cutstat", parents=[common],
                       help="exact cut-size distributions and eigenvalues")
    p.add_argument("--builtin", action="store_true",
                   help="print the table of named reference graphs")
    p.add_argument("files", nargs="*", metavar="FILE",
                   help="files of graph6 strings (default: stdin)")
    p.set_defaults(func=cmd_cutstat)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification campaign")
    p.add_argument("claims",
                   choices=("uniform", "skew", "smallp", "schur", "families"))
    p.add_argument("--plo", type=parse_rational, default=TAU,
                   help="lower endpoint for the skew campaign")
    p.add_argument("--phi", type=parse_rational, default=Fraction(1, 2),
                   help="upper endpoint for the skew campaign")
    p.add_argument("--seed", type=int, default=20260815)
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: OCC_WORKERS or 1)")
    p.add_argument("--campaign-size", type=int, default=1000,
                   help="random-family sample size for the families campaign")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", parents=[common],
                       help="independent-set search and measure-bound audits")
    p.add_argument("action", choices=("max-independent", "bound-check"))
    p.add_argument("--seed", type=int, default=None,
                   help="shuffle the branching order of the search")
    p.add_argument("--n", type=int, choices=(4, 5), default=4,
                   help="vertex count for bound-check")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("schur", parents=[common],
                       help="exhaustive vector-set campaign (alias of "
                            "'verify schur')")
    p.add_argument("--seed", type=int, default=20260815)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("hoffman", parents=[common],
                       help="measure bound nu = -lambda/(1 - lambda)")
    p.add_argument("--lambda-min", dest="lambda_min", type=parse_rational,
                   required=True, metavar="NUM/DEN")
    p.add_argument("--gap", type=parse_rational, default=None, metavar="NUM/DEN",
                   help="secondary gap for the stability coefficient")
    p.set_defaults(func=cmd_hoffman)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except (Graph6Error, FileNotFoundError) as exc:
        print(f"occ: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    truncpascal matrix --r 0,1,2 --x 1,2,5 [--n N] [--extended] [--json]
    truncpascal polya 010100/101101 [--json]
    truncpascal decompose 1000110/1110010 [--json]
    truncpascal verify {main,polya,decompose,sumdot,all} N [--jobs J] [--seed S] [--json] [--output FILE]
    truncpascal table N [--output FILE]
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from . import harness
from . import incidence as inc
from .arithmetic import format_scalar
from .birkhoff import extended_system
from .matrix import det, format_matrix, is_invertible, matrix_to_json, zero_block_witness
from .pascal import diagonal, diagonal_all_nonzero, truncated
from .selection import complement, dominates, format_selection
from .selection import parse as parse_selection

JOBS_ENV = "TRUNCPASCAL_JOBS"


class UsageError(ValueError):
    pass


def _emit(payload: dict, text: str, as_json: bool) -> None:
    print(json.dumps(payload, indent=2) if as_json else text)


def matrix_report(r, x, n: Optional[int] = None, extended: bool = False) -> dict:
    t = truncated(r, x)
    out: dict = {"r": list(r), "x": list(x), "matrix": matrix_to_json(t)}
    if len(r) != len(x):
        out["square"] = False
        return out
    n = max(r.last, x.last, 0) if n is None else n
    d = det(t)
    out.update(
        square=True,
        n=n,
        det=format_scalar(d),
        invertible=d != 0,
        dominates=dominates(r, x),
        diagonal=[str(v) for v in diagonal(r, x)],
        diagonal_nonzero=diagonal_all_nonzero(r, x),
        zero_block_witness=zero_block_witness(t),
    )
    if extended:
        ext = extended_system(r, x, n)
        out["complement"] = list(complement(x, n))
        out["extended"] = matrix_to_json(ext)
        out["extended_det"] = format_scalar(det(ext))
    return out


def cmd_matrix(args: argparse.Namespace) -> int:
    r, x = parse_selection(args.r), parse_selection(args.x)
    rep = matrix_report(r, x, args.n, args.extended)
    t = truncated(r, x)
    lines = [f"T([{format_selection(r)}], [{format_selection(x)}]) =", format_matrix(t)]
    if rep["square"]:
        lines += [
            f"det         = {rep['det']}",
            f"invertible  = {str(rep['invertible']).lower()}",
            f"r <= x      = {str(rep['dominates']).lower()}",
            f"diagonal    = [{', '.join(rep['diagonal'])}]  nonzero={str(rep['diagonal_nonzero']).lower()}",
            f"zero block  = {'none' if rep['zero_block_witness'] is None else 'k=%d' % rep['zero_block_witness']}",
        ]
        if args.extended:
            lines += [
                f"extended system, n={rep['n']}, complement=[{format_selection(rep['complement'])}]:",
                format_matrix(extended_system(r, x, rep["n"])),
                f"extended det = {rep['extended_det']}",
            ]
    else:
        lines.append("rectangular: no determinant")
    _emit(rep, "\n".join(lines), args.json)
    return 0


def polya_report(e: inc.BoolMatrix2xN) -> dict:
    incidence = e.is_incidence()
    return {
        "E": e.to_lists(),
        "n": e.n,
        "ones": e.ones(),
        "incidence": incidence,
        "identity": inc.key(e) == inc.key(inc.BoolMatrix2xN.identity(e.n)),
        "M": inc.cumulative_sums(e),
        "polya": inc.is_polya(e) if incidence else None,
    }


def cmd_polya(args: argparse.Namespace) -> int:
    e = inc.parse(args.E)
    rep = polya_report(e)
    verdict = {True: "Pólya", False: "not Pólya", None: "n/a (not an incidence matrix)"}[rep["polya"]]
    text = "\n".join([
        str(e),
        f"ones      = {rep['ones']} (need {e.width})",
        f"incidence = {str(rep['incidence']).lower()}" + ("  [identity]" if rep["identity"] else ""),
        f"M         = {rep['M']}",
        f"verdict   = {verdict}",
    ])
    _emit(rep, text, args.json)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    e = inc.parse(args.E).as_incidence()
    e1, e2 = inc.decompose(e)
    violations = inc.decomposition_violations(e, e1, e2)
    rep = {
        "E": e.to_lists(),
        "E1": e1.to_lists(),
        "E2": e2.to_lists(),
        "d": e.row0.bit_count(),
        "polya": [inc.is_polya(m) for m in (e, e1, e2)],
        "violations": violations,
    }
    text = "\n".join([
        f"E  (d={rep['d']}, polya={str(rep['polya'][0]).lower()})", str(e),
        f"E1 (polya={str(rep['polya'][1]).lower()})", str(e1),
        f"E2 (polya={str(rep['polya'][2]).lower()})", str(e2),
        "all guarantees hold" if not violations else "VIOLATED: " + ", ".join(violations),
    ])
    _emit(rep, text, args.json)
    return 0 if not violations else 1


def cmd_verify(args: argparse.Namespace) -> int:
    scopes = harness.ALL_SCOPES if args.scope == "all" else (args.scope,)
    for scope in scopes:
        if not 0 <= args.n <= harness.MAX_N[scope]:
            raise UsageError(f"n={args.n} exceeds the cap {harness.MAX_N[scope]} for {scope}")
    reports = []
    for scope in scopes:
        kwargs = {"jobs": args.jobs, "cap": args.cap}
        if scope == "main":
            kwargs["seed"] = args.seed
        reports.append(harness.SWEEPS[scope](args.n, **kwargs))
    payload = {"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]}
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=2)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(r.summary())
            for cx in r.counterexamples[:5]:
                print("   ", json.dumps(cx))
    return 0 if payload["ok"] else 1


def determinant_table(n: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["r", "x", "det", "dominates", "polya"])
    for r, x in harness.enumerate_selection_pairs(n):
        writer.writerow([
            format_selection(r),
            format_selection(x),
            format_scalar(det(truncated(r, x))),
            int(dominates(r, x)),
            int(inc.is_polya(inc.from_selection(r, x, n))),
        ])
    return buf.getvalue()


def cmd_table(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= harness.MAX_N["main"]:
        raise UsageError(f"n={args.n} exceeds the cap {harness.MAX_N['main']}")
    text = determinant_table(args.n)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="truncpascal", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="build T(r, x) and report its invertibility")
    p.add_argument("--r", required=True, help="row selection, e.g. 0,1,2")
    p.add_argument("--x", required=True, help="column selection, e.g. 1,2,5")
    p.add_argument("--n", type=int, default=None, help="ambient bound (default max(r_d, x_d))")
    p.add_argument("--extended", action="store_true", help="also show the (n+1)x(n+1) block system")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("polya", help="cumulative sums and Pólya verdict for a 2-row 0/1 matrix")
    p.add_argument("E", help="two 0/1 rows joined by '/', e.g. 010100/101101")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_polya)

    p = sub.add_parser("decompose", help="split an incidence matrix into a sum-dot of two")
    p.add_argument("E")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run an exhaustive sweep")
    p.add_argument("scope", choices=[*harness.SWEEPS, "all"])
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.add_argument("--seed", type=int, default=harness.DEFAULT_SEED,
                   help="seed for the cofactor-oracle sample")
    p.add_argument("--cap", type=int, default=harness.DEFAULT_CAP, help="max counterexamples kept")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--output", help="also write the JSON report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="CSV of det, dominance and Pólya for every pair")
    p.add_argument("n", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

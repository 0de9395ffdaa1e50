"""Command-line front end: compute coefficients, print tables, run suites.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
index error.  The environment variable QFAUL_THREADS caps the worker pool
used to fan out verification cases; output ordering is deterministic (sorted
by case key) regardless of scheduling.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import coeffs, identities, lgv
from .laurent import CoeffRecord, shape_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_TABLE_DEFAULT = {"P": 5, "Q": 4, "G": 5, "H": 4}


def compute_record(family: str, m: int, k: int, method: str = "det") -> CoeffRecord:
    if method == "det":
        poly = coeffs.det_route(family, m, k)
    elif method == "invert":
        poly = coeffs.invert_route(family, m, k)
    elif method == "lgv":
        poly = lgv.brute_route(family, m, k)
    elif method == "lgv-det":
        poly = lgv.lgv_det_route(family, m, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    route = {"lgv": "lgv-brute"}.get(method, method)
    return CoeffRecord(family=family, m=m, k=k, route=route, poly=poly)


def record_to_json_dict(record: CoeffRecord) -> dict:
    return {
        "family": record.family,
        "m": record.m,
        "k": record.k,
        "variable": record.variable,
        "route": record.route,
        "min_exp": 0,
        "coefficients": [str(c) for c in record.coefficients()],
    }


def dumps(obj) -> str:
    """Canonical JSON serialization (stable byte-for-byte round trips)."""
    return json.dumps(obj, separators=(",", ":"))


def record_to_csv_rows(record: CoeffRecord) -> list[str]:
    rows = ["family,m,k,exp,coefficient"]
    for e, c in enumerate(record.coefficients()):
        rows.append(f"{record.family},{record.m},{record.k},{e},{c}")
    return rows


def _emit_record(record: CoeffRecord, fmt: str, out) -> None:
    if fmt == "pretty":
        print(record.poly.to_string("q") if not record.poly.is_zero else "0", file=out)
    elif fmt == "json":
        print(dumps(record_to_json_dict(record)), file=out)
    elif fmt == "csv":
        print("\n".join(record_to_csv_rows(record)), file=out)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _thread_count() -> int:
    raw = os.environ.get("QFAUL_THREADS", "")
    if raw.strip():
        n = int(raw)
        if n < 1:
            raise ValueError("QFAUL_THREADS must be a positive integer")
        return n
    return min(8, os.cpu_count() or 1)


def _run_cases(cases: list[tuple[str, object]], out) -> bool:
    """Run (key, thunk) verification cases, print sorted pass/fail lines."""
    workers = _thread_count()
    keys = [key for key, _ in cases]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda case: bool(case[1]()), cases))
    all_ok = True
    for key, ok in sorted(zip(keys, results)):
        print(f"{'PASS' if ok else 'FAIL'} {key}", file=out)
        all_ok = all_ok and ok
    return all_ok


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _suite_theorem1(max_m: int, max_n: int) -> list:
    cases = []
    for n in range(1, max_n + 1):
        cases.append((f"theorem1 which=p m=0 n={n}",
                      lambda m=0, n=n: identities.verify_theorem1("p", m, n)))
    for which in ("p", "qmn", "t2mnq", "t2m1"):
        for m in range(1, max_m + 1):
            for n in range(1, max_n + 1):
                cases.append(
                    (f"theorem1 which={which} m={m} n={n}",
                     lambda w=which, m=m, n=n: identities.verify_theorem1(w, m, n))
                )
    return cases


def _suite_lemma2(max_m: int, max_l: int) -> list:
    return [
        (f"lemma2 which={which} m={m} l={l}",
         lambda w=which, m=m, l=l: identities.verify_lemma2(w, m, l))
        for which in ("diff1", "inverseq", "diff", "sumd")
        for m in range(1, max_m + 1)
        for l in range(1, max_l + 1)
    ]


def _suite_lemma1(max_l: int) -> list:
    return [
        (f"lemma1 a={a} b={b} q0={q0} l={l}",
         lambda a=a, b=b, q0=q0, l=l: identities.verify_lemma1(a, b, q0, l, 12))
        for (a, b) in ((1, 1), (1, 0), (0, 1))
        for q0 in (Fraction(2), Fraction(1, 2), Fraction(3))
        for l in range(1, max_l + 1)
    ]


def _suite_inverse(n: int) -> list:
    cases = [
        (f"inverse family={family} n={n}",
         lambda f=family: coeffs.verify_inverse_pair(f, n))
        for family in ("P", "Q", "G", "H")
    ]
    for m in range(2, 7):
        for t0 in (Fraction(2), Fraction(1, 2), Fraction(3)):
            cases.append(
                (f"inverse dstr-vanishing m={m} t0={t0}",
                 lambda m=m, t0=t0: coeffs.verify_dstr_vanishing(m, t0))
            )
    return cases


def _suite_lgv(max_m: int) -> list:
    def agree(family, m, k):
        det = coeffs.det_route(family, m, k)
        return det == lgv.brute_route(family, m, k) == lgv.lgv_det_route(family, m, k)

    return [
        (f"lgv family={family} m={m} k={k}",
         lambda f=family, m=m, k=k: agree(f, m, k))
        for family in ("P", "Q", "G", "H")
        for m in range(2, max_m + 1)
        for k in range(1, m)
    ]


def _suite_symmetry(max_m: int) -> list:
    def structural(family, m, k):
        p = coeffs.det_route(family, m, k)
        return p.is_palindromic() and all(c >= 0 for c in p.coeffs) and (
            p.is_zero or p.min_exp == 0
        )

    def boundary(family, m):
        factor = 1 if family in ("P", "Q") else 2
        return coeffs.det_route(family, m, m - 1) == factor * coeffs.det_route(
            family, m, m - 2
        )

    cases = [
        (f"symmetry family={family} m={m} k={k}",
         lambda f=family, m=m, k=k: structural(f, m, k))
        for family in ("P", "Q", "G", "H")
        for m in range(1, max_m + 1)
        for k in range(0, m)
    ]
    cases += [
        (f"symmetry boundary family={family} m={m}",
         lambda f=family, m=m: boundary(f, m))
        for family in ("P", "Q", "G", "H")
        for m in range(2, max_m + 1)
    ]
    return cases


def _suite_classical(max_m: int, max_n: int) -> list:
    return [
        (f"classical max_m={max_m} max_n={max_n}",
         lambda: identities.classical_check(max_m, max_n))
    ]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_compute(args, out) -> int:
    try:
        record = compute_record(args.family, args.m, args.k, args.method)
    except (coeffs.BadIndexError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit_record(record, args.format, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    max_m = args.max_m or _TABLE_DEFAULT[args.family]
    for m in range(1, max_m + 1):
        for k in range(0, m):
            record = compute_record(args.family, m, k, "det")
            if args.format == "pretty":
                print(f"{args.family}({m},{k}) = {record.poly.to_string('q')}", file=out)
            else:
                _emit_record(record, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    suites = {
        "theorem1": lambda: _suite_theorem1(min(args.max_m or 5, 5), args.max_n or 6),
        "lemma1": lambda: _suite_lemma1(args.max_l or 5),
        "lemma2": lambda: _suite_lemma2(args.max_m or 8, args.max_l or 8),
        "inverse": lambda: _suite_inverse(args.n or 6),
        "lgv": lambda: _suite_lgv(args.max_m or 6),
        "symmetry": lambda: _suite_symmetry(args.max_m or 8),
        "classical": lambda: _suite_classical(min(args.max_m or 4, 4), args.max_n or 20),
    }
    if args.suite == "all":
        cases = []
        for name in ("theorem1", "lemma1", "lemma2", "inverse", "lgv", "symmetry",
                     "classical"):
            cases += suites[name]()
    else:
        cases = suites[args.suite]()
    return EXIT_OK if _run_cases(cases, out) else EXIT_FAIL


def cmd_shape(args, out) -> int:
    max_m = args.max_m or 8
    for m in range(1, max_m + 1):
        for k in range(0, m):
            poly = coeffs.det_route(args.family, m, k)
            report = shape_report(poly)
            print(
                f"{args.family}({m},{k}) unimodal={report.unimodal} "
                f"log_concave={report.log_concave}",
                file=out,
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfaulhaber",
        description="Exact q-Faulhaber and q-Salie coefficient polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one coefficient polynomial")
    p_compute.add_argument("--family", required=True, choices=("P", "Q", "G", "H"))
    p_compute.add_argument("--m", type=int, required=True)
    p_compute.add_argument("--k", type=int, required=True)
    p_compute.add_argument(
        "--method", default="det", choices=("det", "invert", "lgv", "lgv-det")
    )
    p_compute.add_argument("--format", default="pretty", choices=("pretty", "json", "csv"))

    p_table = sub.add_parser("table", help="print a triangular family table")
    p_table.add_argument("--family", required=True, choices=("P", "Q", "G", "H"))
    p_table.add_argument("--max-m", dest="max_m", type=int, default=None)
    p_table.add_argument("--format", default="pretty", choices=("pretty", "json", "csv"))

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=("theorem1", "lemma1", "lemma2", "inverse", "lgv", "symmetry",
                 "classical", "all"),
    )
    p_verify.add_argument("--max-m", dest="max_m", type=int, default=None)
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_verify.add_argument("--max-l", dest="max_l", type=int, default=None)
    p_verify.add_argument("--n", dest="n", type=int, default=None)

    p_shape = sub.add_parser("shape", help="report unimodality and log-concavity")
    p_shape.add_argument("--family", required=True, choices=("P", "Q", "G", "H"))
    p_shape.add_argument("--max-m", dest="max_m", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {
        "compute": cmd_compute,
        "table": cmd_table,
        "verify": cmd_verify,
        "shape": cmd_shape,
    }
    return handlers[args.command](args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: partitions, hilb-integral, ifunction, tn, ch-series, euler,
dt-check, verify.  Output is a human table by default or machine JSON with
``--format json``; JSON keys appear in a fixed order and all rationals are
rendered as exact strings, so identical invocations produce byte-identical
output.  Exit codes: 0 on success, 1 when ``verify`` finds a failing check,
2 on flag or range errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import __version__
from .exact import LaurentPoly, QSeries
from .fmcalc import tn_integral
from .hilb import enumerate_partitions, hilb_integral
from .ifun import nonpolar_ifunction
from .verify import run_all_checks
from .wallx import ch_series, dt_identity_check, euler_series_closed, euler_series_wc


class UsageError(Exception):
    """A flag value is out of range."""


def _laurent_json(p: LaurentPoly) -> dict:
    return {
        "variable": p.var,
        "terms": [{"coeff": str(p.terms[e]), "exp": e} for e in sorted(p.terms)],
    }


def _series_json(s: QSeries) -> dict:
    coefficients = []
    for c in s.coeffs:
        if isinstance(c, LaurentPoly):
            coefficients.append(_laurent_json(c)["terms"])
        else:
            value = Fraction(c)
            coefficients.append([] if value == 0 else [{"coeff": str(value), "exp": 0}])
    return {"variable": "q", "coefficients": coefficients}


def _document(result: dict, query: dict) -> dict:
    return {"result": result, "query": query, "version": __version__}


def emit_json(doc: dict) -> str:
    """Serialize a result document with stable key order."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _series_table(s: QSeries) -> str:
    return "\n".join(f"q^{n}: {c}" for n, c in enumerate(s.coeffs))


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_partitions(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    parts = enumerate_partitions(args.n)
    query = {"command": "partitions", "n": args.n}
    if args.format == "json":
        result = {"count": len(parts), "partitions": [list(p.parts) for p in parts]}
        _write(args, emit_json(_document(result, query)))
    else:
        lines = [",".join(str(x) for x in p.parts) if p.parts else "(empty)"
                 for p in parts]
        _write(args, "\n".join(lines + [f"count: {len(parts)}"]) + "\n")
    return 0


def _cmd_hilb_integral(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    ks = sorted(args.ch or [])
    if any(k < 0 for k in ks):
        raise UsageError("--ch must be >= 0")
    value = hilb_integral(args.n, ks)
    query = {"command": "hilb-integral", "n": args.n, "ch": ks}
    if args.format == "json":
        _write(args, emit_json(_document(_laurent_json(value), query)))
    else:
        _write(args, str(value) + "\n")
    return 0


def _cmd_ifunction(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    ks = sorted(args.ch or [])
    if any(k < 0 for k in ks):
        raise UsageError("--ch must be >= 0")
    value = nonpolar_ifunction(args.n, ks).as_laurent("u")
    query = {"command": "ifunction", "n": args.n, "ch": ks}
    if args.format == "json":
        _write(args, emit_json(_document(_laurent_json(value), query)))
    else:
        _write(args, str(value) + "\n")
    return 0


def _cmd_tn(args) -> int:
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    if args.psi1 < 0 or args.psiinf < 0:
        raise UsageError("--psi1 and --psiinf must be >= 0")
    value = tn_integral(args.n, args.psi1, args.psiinf)
    query = {"command": "tn", "n": args.n, "psi1": args.psi1, "psiinf": args.psiinf}
    if args.format == "json":
        _write(args, emit_json(_document({"rational": str(value)}, query)))
    else:
        _write(args, str(value) + "\n")
    return 0


def _cmd_ch_series(args) -> int:
    if args.k is None or args.k < 0:
        raise UsageError("--k must be >= 0")
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    series = ch_series(args.k, args.order)
    query = {"command": "ch-series", "k": args.k, "order": args.order}
    if args.format == "json":
        _write(args, emit_json(_document(_series_json(series), query)))
    else:
        _write(args, _series_table(series) + "\n")
    return 0


def _cmd_euler(args) -> int:
    if args.d not in (1, 2):
        raise UsageError("--d must be 1 or 2")
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    wc = euler_series_wc(args.d, args.c, args.order)
    query = {"command": "euler", "d": args.d, "c": args.c,
             "order": args.order, "check": bool(args.check)}
    if args.check:
        closed = euler_series_closed(args.d, args.c, args.order)
        match = wc == closed
        if args.format == "json":
            result = {"wall_crossing": _series_json(wc),
                      "closed_form": _series_json(closed),
                      "match": match}
            _write(args, emit_json(_document(result, query)))
        else:
            _write(args, "wall-crossing:\n" + _series_table(wc)
                   + "\nclosed form:\n" + _series_table(closed)
                   + ("\nMATCH\n" if match else "\nMISMATCH\n"))
        return 0
    if args.format == "json":
        _write(args, emit_json(_document(_series_json(wc), query)))
    else:
        _write(args, _series_table(wc) + "\n")
    return 0


def _cmd_dt_check(args) -> int:
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    holds = dt_identity_check(args.c, args.order)
    query = {"command": "dt-check", "c": args.c, "order": args.order}
    if args.format == "json":
        _write(args, emit_json(_document({"identity_holds": holds}, query)))
    else:
        _write(args, ("MATCH" if holds else "MISMATCH") + "\n")
    return 0


def _cmd_verify(args) -> int:
    results = run_all_checks()
    all_passed = all(r.passed for r in results)
    query = {"command": "verify"}
    if args.format == "json":
        result = {"passed": all_passed,
                  "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                             for r in results]}
        _write(args, emit_json(_document(result, query)))
    else:
        lines = []
        for i, r in enumerate(results, 1):
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"[{i:2d}/{len(results)}] {status}  {r.name}: {r.detail}")
        lines.append("all checks passed" if all_passed else "SOME CHECKS FAILED")
        _write(args, "\n".join(lines) + "\n")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbwall",
        description="Exact equivariant tautological integrals on Hilbert "
                    "schemes of points of the plane, and their wall-crossing "
                    "series.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("partitions", help="list the partitions of n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_partitions)

    p = sub.add_parser("hilb-integral",
                       help="bracket of ch insertions on the n-point Hilbert scheme")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ch", "--k", dest="ch", type=int, action="append",
                   help="a ch index; repeat for multiple insertions")
    common(p)
    p.set_defaults(fn=_cmd_hilb_integral)

    p = sub.add_parser("ifunction",
                       help="nonpolar one-end contribution, as a monomial in u = t + z")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ch", "--k", dest="ch", type=int, action="append")
    common(p)
    p.set_defaults(fn=_cmd_ifunction)

    p = sub.add_parser("tn", help="integral of psi1^a psi_inf^b over the tree locus T_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--psi1", type=int, required=True)
    p.add_argument("--psiinf", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_tn)

    p = sub.add_parser("ch-series", help="generating series of the ch_k brackets")
    p.add_argument("--k", "--ch", dest="k", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_ch_series)

    p = sub.add_parser("euler", help="Euler-characteristic series by wall-crossing")
    p.add_argument("--d", type=int, required=True, help="dimension, 1 or 2")
    p.add_argument("--c", type=int, required=True, help="integer Chern number")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="also compute the closed form and compare")
    common(p)
    p.set_defaults(fn=_cmd_euler)

    p = sub.add_parser("dt-check",
                       help="check the MacMahon substitution identity in dimension 3")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_dt_check)

    p = sub.add_parser("verify", help="run the full verification suite")
    common(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed a diagnostic
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()

"""Command-line front end: ``atgrs {verify,search,invert,wseq}``.

Exit status: 0 for success or an MDS verdict, 1 for a non-MDS verdict, 2 for
usage or input errors.  Standard output carries only the report; progress
and timings go to standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .errors import AtgrsError, InvalidSpec
from .field import GF, make_field
from .specio import _load, load_code_spec, load_field, load_search_config, spec_to_dict
from .structmat import (
    WSeq,
    format_matrix,
    gaussian_inverse,
    identity,
    mat_mul,
    poly_from_roots,
    toeplitz_inverse_reversed,
    toeplitz_inverse_unit,
    toeplitz_lower,
    vandermonde,
    vandermonde_inverse_explicit,
    wseq_direct,
)
from .tgrs import is_mds

EXIT_OK, EXIT_NOT_MDS, EXIT_INPUT = 0, 1, 2


def _emit(doc: dict, fmt: str, text: str, out) -> None:
    if fmt == "structured":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text)


def _timing(args, doc: dict, start: float) -> None:
    elapsed = time.perf_counter() - start
    print(f"[{args.command}] {elapsed:.3f}s", file=sys.stderr)
    if getattr(args, "timing", False):
        doc["duration_s"] = round(elapsed, 6)


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    spec = load_code_spec(args.spec)
    report = is_mds(spec, args.method, full_report=args.full_report, jobs=args.jobs)
    doc = {
        "command": "verify",
        "spec": spec_to_dict(spec),
        "seed": None,
        "report": report.to_dict(),
    }
    _timing(args, doc, start)
    lines = [
        f"mds: {'true' if report.is_mds else 'false'}",
        f"method: {report.method}",
        f"novelty: {report.novelty}",
        f"failing subsets: {len(report.failing_subsets)}",
    ]
    lines += ["  " + " ".join(map(str, s)) for s in report.failing_subsets]
    _emit(doc, args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK if report.is_mds else EXIT_NOT_MDS


def cmd_search(args, out) -> int:
    from .search import run_search

    start = time.perf_counter()
    cfg = load_search_config(args.config)
    if args.limit is not None:
        cfg.limit = args.limit
    doc = run_search(cfg, jobs=args.jobs, seed=args.seed)
    _timing(args, doc, start)
    lines = [f"candidates evaluated: {doc['candidates_evaluated']}", f"matches: {len(doc['results'])}"]
    for r in doc["results"]:
        rows = "; ".join(" ".join(map(str, row)) for row in r["eta"])
        lines.append(f"{r['novelty']}: {rows}")
    _emit(doc, args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK


def _invert(gf: GF, kind: str, doc: dict):
    alpha = doc.get("alpha")
    if not isinstance(alpha, list) or not alpha:
        raise InvalidSpec("'alpha' must be a non-empty list of integers")
    for a in alpha:
        gf.check(a)
    n = len(alpha)
    if kind == "vandermonde":
        m = vandermonde(gf, alpha, n)
        inv = vandermonde_inverse_explicit(gf, alpha)
    elif kind == "toeplitz":
        size = int(doc.get("size", n))
        col = doc.get("col") or list(reversed(poly_from_roots(gf, alpha)))
        m = toeplitz_lower(col, size)
        inv = toeplitz_inverse_unit(gf, col, size, alpha)
    elif kind == "toeplitz-reversed":
        c = list(reversed(poly_from_roots(gf, alpha)))
        col = doc.get("col") or [c[n - i] for i in range(n)]
        m = toeplitz_lower(col, n)
        inv = toeplitz_inverse_reversed(gf, col, alpha)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidSpec(f"unknown kind {kind}")
    size = len(m)
    if mat_mul(gf, m, inv) != identity(size) or mat_mul(gf, inv, m) != identity(size):
        raise AssertionError("inverse failed the product check")
    return inv


def cmd_invert(args, out) -> int:
    doc = _load(args.input)
    gf = load_field(doc)
    inv = _invert(gf, args.kind, doc)
    if args.check_oracle:
        alpha = doc["alpha"]
        if args.kind == "vandermonde":
            ref = gaussian_inverse(gf, vandermonde(gf, alpha, len(alpha)))
            if ref != inv:
                raise AssertionError("closed form disagrees with Gaussian elimination")
    out.write(format_matrix(gf, inv))
    return EXIT_OK


def _field_from_args(args) -> GF:
    modulus = args.modulus if args.modulus else ("auto" if args.m > 1 else None)
    return make_field(args.p, args.m, modulus)


def cmd_wseq(args, out) -> int:
    gf = _field_from_args(args)
    alpha = args.alpha
    for a in alpha:
        gf.check(a)
    if args.lo > args.hi:
        raise InvalidSpec("lo must be <= hi")
    w = WSeq(gf, alpha, args.lo, args.hi)
    for t in (args.lo, args.hi):
        if w[t] != wseq_direct(gf, alpha, t):
            raise AssertionError(f"shift register disagrees with direct sum at t={t}")
    out.write("".join(f"{t} {gf.render(x)}\n" for t, x in w.items()))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="atgrs", description="Twisted Reed-Solomon MDS toolkit")
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--timing", action="store_true", help="include wall-clock duration in the report")

    p = sub.add_parser("verify", help="decide whether a code spec is MDS")
    p.add_argument("spec")
    p.add_argument("--method", choices=("criterion", "brute", "brute-force", "both"), default="criterion")
    p.add_argument("--full-report", action="store_true", help="list every failing subset")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search twist matrices for MDS codes")
    p.add_argument("config")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("invert", help="closed-form structured inverse")
    p.add_argument("kind", choices=("vandermonde", "toeplitz", "toeplitz-reversed"))
    p.add_argument("input")
    p.add_argument("--check-oracle", action="store_true", help="also compare with Gaussian elimination")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("wseq", help="print w_t for t in [lo, hi]")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--modulus", type=_int_list, default=None)
    p.add_argument("--alpha", type=_int_list, required=True)
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, required=True)
    p.set_defaults(func=cmd_wseq)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args, out)
    except (AtgrsError, OSError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

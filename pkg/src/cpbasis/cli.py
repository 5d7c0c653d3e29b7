"""Command-line front end with machine-readable output.

Every run is deterministic for fixed flags.  Exit codes: 0 = success or
verified, 1 = verification failure, 2 = usage error.  Human-readable
tables go to stdout; `--format json|csv` switches to structured output;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from math import comb

from .basis import BasisKind, enumerate_basis, graded_series, rr_counts
from .ident import transport_partition
from .leading import fs_leading_terms, std_leading_terms, window_split
from .oracle import audit_windows
from .rootdata import (
    RootSystemSpec,
    fundamental_weight_one,
    highest_root,
    verify_branching,
    weight,
    weyl_dim,
)


def _leading_rows(kind: str, rank: int, level: int, window: int):
    if kind == "fs":
        terms = fs_leading_terms(rank, level, window)
    else:
        terms = std_leading_terms(rank, level, window)
    for term in sorted(terms, key=lambda p: p.sort_key):
        yield {
            "window": window,
            "split": window_split(term, window),
            "factors": [str(f) for f in term.factors],
        }


def _cmd_leading_terms(args) -> int:
    rows = list(_leading_rows(args.kind, args.rank, args.level, args.window))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "kind": args.kind,
                    "rank": args.rank,
                    "level": args.level,
                    "window": args.window,
                    "terms": rows,
                }
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["window", "split", "factors"])
        for row in rows:
            writer.writerow([row["window"], row["split"], " ".join(row["factors"])])
    else:
        print(f"leading terms: kind={args.kind} rank={args.rank} "
              f"level={args.level} window={args.window} ({len(rows)} terms)")
        for row in rows:
            print(f"  split={row['split']}  {' '.join(row['factors'])}")
    return 0


def _cmd_enumerate(args) -> int:
    basis = BasisKind(args.kind, args.rank, args.level)
    layers = enumerate_basis(basis, args.max_degree)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "kind": args.kind,
                    "rank": args.rank,
                    "level": args.level,
                    "truncation": args.max_degree,
                    "elements": [
                        {"degree": -m, "factors": [str(f) for f in p.factors]}
                        for m, layer in enumerate(layers)
                        for p in layer
                    ],
                }
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["degree", "factors"])
        for m, layer in enumerate(layers):
            for p in layer:
                writer.writerow([-m, " ".join(str(f) for f in p.factors)])
    else:
        print(f"admissible partitions: kind={args.kind} rank={args.rank} "
              f"level={args.level} down to degree -{args.max_degree}")
        for m, layer in enumerate(layers):
            print(f"degree -{m}: {len(layer)} elements")
            for p in layer:
                print(f"  {p}")
    return 0


def _cmd_series(args) -> int:
    basis = BasisKind(args.kind, args.rank, args.level)
    series = graded_series(basis, args.max_degree)
    print(
        json.dumps(
            {
                "kind": args.kind,
                "rank": args.rank,
                "level": args.level,
                "truncation": args.max_degree,
                "coeffs": list(series.coeffs),
            }
        )
    )
    return 0


def _cmd_verify_coincidence(args) -> int:
    ell, k, n = args.ell, args.level, args.max_degree
    fs_layers = enumerate_basis(BasisKind("fs", 2 * ell, k), n)
    std_layers = enumerate_basis(BasisKind("std", ell, k), n)
    ok = True
    print(f"coincidence check: fs rank {2 * ell} vs std rank {ell}, level {k}")
    print("degree  fs-count  std-count  transported-match")
    for m in range(n + 1):
        transported = {transport_partition(p, ell) for p in fs_layers[m]}
        match = transported == set(std_layers[m]) and len(transported) == len(
            fs_layers[m]
        )
        ok = ok and match
        print(
            f"{-m:6d}  {len(fs_layers[m]):8d}  {len(std_layers[m]):9d}  "
            f"{'yes' if match else 'NO'}"
        )
    fs_coeffs = [len(layer) for layer in fs_layers]
    std_coeffs = [len(layer) for layer in std_layers]
    series_equal = fs_coeffs == std_coeffs
    ok = ok and series_equal
    print(f"graded series equal: {'yes' if series_equal else 'NO'}")
    print("coincidence verified" if ok else "coincidence FAILED")
    return 0 if ok else 1


def _cmd_audit_oracle(args) -> int:
    report = audit_windows(args.rank, args.level, args.max_window)
    print(json.dumps(report.to_json()))
    return 0 if report.ok else 1


def _cmd_weyl_dim(args) -> int:
    spec = RootSystemSpec(args.family, args.rank)
    try:
        coords = [Fraction(c) for c in args.weight.split(",")]
        lam = weight(spec, coords)
        dim = weyl_dim(spec, lam)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dim)
    return 0


def _cmd_verify_branching(args) -> int:
    ok = True
    print("ell  m  symplectic-dim  special-linear-dim  binomial  match")
    for m in range(1, args.max_m + 1):
        c_spec = RootSystemSpec("C", args.ell)
        a_spec = RootSystemSpec("A", 2 * args.ell - 1)
        c_dim = weyl_dim(c_spec, m * highest_root(c_spec))
        a_dim = weyl_dim(a_spec, (2 * m) * fundamental_weight_one(a_spec))
        binom = comb(2 * args.ell + 2 * m - 1, 2 * m)
        match = verify_branching(args.ell, m)
        ok = ok and match
        print(
            f"{args.ell:3d}  {m}  {c_dim:14d}  {a_dim:18d}  {binom:8d}  "
            f"{'yes' if match else 'NO'}"
        )
    print("branching verified" if ok else "branching FAILED")
    return 0 if ok else 1


def _cmd_rr_check(args) -> int:
    rows = rr_counts(args.max)
    ok = all(c == d for _, c, d in rows)
    print("m  congruence-count  gap-count")
    for m, c, d in rows:
        print(f"{m}  {c}  {d}")
    print("counts agree" if ok else "counts DISAGREE")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpbasis",
        description="Monomial-basis combinatorics for symplectic affine Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kind_flags(p, with_window=False, with_max_degree=False, with_format=True):
        p.add_argument("--kind", choices=["fs", "std"], required=True)
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--level", type=int, required=True)
        if with_window:
            p.add_argument("--window", type=int, required=True)
        if with_max_degree:
            p.add_argument("--max-degree", type=int, required=True)
        if with_format:
            p.add_argument(
                "--format", choices=["human", "json", "csv"], default="human"
            )

    p = sub.add_parser("leading-terms", help="closed-form leading terms on one window")
    add_kind_flags(p, with_window=True)
    p.set_defaults(func=_cmd_leading_terms)

    p = sub.add_parser("enumerate", help="admissible partitions by degree")
    add_kind_flags(p, with_max_degree=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("series", help="graded series of admissible partitions (JSON)")
    add_kind_flags(p, with_max_degree=True, with_format=False)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser(
        "verify-coincidence",
        help="transport bijection and series equality between fs(2l) and std(l)",
    )
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=_cmd_verify_coincidence)

    p = sub.add_parser(
        "audit-oracle", help="brute-force audit of the leading-term generators (JSON)"
    )
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-window", type=int, required=True)
    p.set_defaults(func=_cmd_audit_oracle)

    p = sub.add_parser("weyl-dim", help="exact dimension of an irreducible module")
    p.add_argument("--family", choices=["A", "B", "C", "D"], required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument(
        "--weight", required=True, help="comma-separated rational coordinates"
    )
    p.set_defaults(func=_cmd_weyl_dim)

    p = sub.add_parser(
        "verify-branching", help="rank-doubling dimension identity, m = 1..max-m"
    )
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.set_defaults(func=_cmd_verify_branching)

    p = sub.add_parser("rr-check", help="Rogers-Ramanujan counting demo")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_rr_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

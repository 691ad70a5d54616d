"""Command-line harness: gen / invert / verify / bench.

Exit codes: 0 success (or verified), 1 verification failure, 2 usage or
input errors (bad flags, unreadable files, non-permutation input).
"""

from __future__ import annotations

import argparse
import sys

from .bench import append_csv, run_cell, run_grid, summarize, write_csv
from .perms import (
    PermProfile,
    generate,
    is_permutation,
    load_permutation,
    oracle_invert,
    save_permutation,
)

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _parse_n_list(text: str) -> list[int]:
    """Either comma-separated sizes or 'LO..HI' meaning doubling from LO."""
    text = text.strip()
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo < 1 or hi < lo:
            raise ValueError(f"bad n range {text!r}")
        out = []
        n = lo
        while n <= hi:
            out.append(n)
            n *= 2
        return out
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perminv",
        description="Generate, invert, verify and benchmark permutations "
        "stored with values restricted to [1..n].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a generated permutation file")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--profile", default="random",
                       help="identity | single-cycle | small-cycles(L) | random | mixed(F)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)

    p_inv = sub.add_parser("invert", help="invert a permutation file")
    p_inv.add_argument("--algo", default="sqrt",
                       choices=["oracle", "quadratic", "randomized", "sqrt"])
    p_inv.add_argument("--in", dest="in_path", required=True)
    p_inv.add_argument("--out", required=True)
    p_inv.add_argument("--seed", type=int, default=0,
                       help="hash seed for --algo randomized")
    p_inv.add_argument("--stats", default=None,
                       help="append an access-count CSV row here")

    p_ver = sub.add_parser("verify", help="check candidate = inverse(original)")
    p_ver.add_argument("original")
    p_ver.add_argument("candidate")

    p_bench = sub.add_parser("bench", help="run an access-count grid, write CSV")
    p_bench.add_argument("--algos", default="quadratic,randomized,sqrt",
                         help="comma-separated subset of oracle,quadratic,randomized,sqrt")
    p_bench.add_argument("--n-list", default="1024..16384",
                         help="comma list of sizes, or LO..HI for doubling steps")
    p_bench.add_argument("--profile", default="single-cycle")
    p_bench.add_argument("--seeds", default="0",
                         help="comma-separated seed values, one run per seed")
    p_bench.add_argument("--csv", required=True)

    return parser


def _cmd_gen(args) -> int:
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return USAGE_ERROR
    profile = PermProfile.parse(args.profile, seed=args.seed)
    save_permutation(args.out, generate(args.n, profile))
    return 0


def _cmd_invert(args) -> int:
    import time

    from .audited import AuditedArray
    from .bench import BenchRecord, _oracle_inplace
    from .invert import Strategy, invert

    values = load_permutation(args.in_path)
    if not is_permutation(values):
        print(f"error: {args.in_path}: not a permutation", file=sys.stderr)
        return USAGE_ERROR
    a = AuditedArray(values)
    t0 = time.perf_counter_ns()
    if args.algo == "oracle":
        _oracle_inplace(a)
    else:
        invert(a, Strategy(args.algo, seed=args.seed))
    wall = time.perf_counter_ns() - t0
    save_permutation(args.out, a)
    if args.stats:
        append_csv(args.stats, BenchRecord(
            algorithm=args.algo, n=a.n, profile="file", seed=args.seed,
            reads=a.reads, writes=a.writes, wall_ns=wall,
        ))
    return 0


def _cmd_verify(args) -> int:
    original = load_permutation(args.original)
    candidate = load_permutation(args.candidate)
    if not is_permutation(original):
        print(f"error: {args.original}: not a permutation", file=sys.stderr)
        return USAGE_ERROR
    if candidate == oracle_invert(original):
        print("verified: candidate is the inverse")
        return 0
    print("verification failed: candidate is not the inverse", file=sys.stderr)
    return VERIFY_FAILURE


def _cmd_bench(args) -> int:
    algos = [tok.strip() for tok in args.algos.split(",") if tok.strip()]
    n_list = _parse_n_list(args.n_list)
    seeds = _parse_int_list(args.seeds)
    if not algos or not n_list or not seeds:
        print("error: empty benchmark grid", file=sys.stderr)
        return USAGE_ERROR
    PermProfile.parse(args.profile)  # fail fast on bad syntax
    records = run_grid(algos, n_list, args.profile, seeds)
    write_csv(args.csv, records)
    print(f"wrote {len(records)} records to {args.csv}")
    for algo, exponent in summarize(records).items():
        print(f"{algo}: fitted access exponent {exponent:.3f} "
              f"over n={n_list[0]}..{n_list[-1]}")
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _HANDLERS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``build``, ``query``, ``gen``, ``bench`` and ``report``.

Exit status is 0 on success, 1 on runtime errors and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import indexfile
from .corpus import DEFAULT_SEP_BYTE, read_collection
from .errors import DocListError
from .listing import (
    Index,
    build_index,
    list_documents,
    list_documents_brute_c,
    list_documents_brute_d,
)
from .suffix_index import pattern_range
from .synth import SynthSpec, generate, sample_patterns, write_collection

MODES = ("gcda", "brute-c", "brute-d")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _beta(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not value >= 1:
        raise argparse.ArgumentTypeError("beta must be >= 1")
    return value


def _byte(text: str) -> int:
    value = int(text, 0)
    if not 0 < value < 256:
        raise argparse.ArgumentTypeError("separator must be a byte value in 1..255")
    return value


def _rate(text: str) -> float:
    value = float(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError("rate must lie in (0, 1]")
    return value


def run_query(idx: Index, pattern: bytes, mode: str) -> list[int]:
    if mode == "gcda":
        return list_documents(idx, pattern)
    if mode == "brute-c":
        return list_documents_brute_c(idx, pattern)
    return list_documents_brute_d(idx.collection, idx.suffixes, pattern)


def read_patterns(path: str | Path) -> list[bytes]:
    return [line for line in Path(path).read_bytes().split(b"\n") if line]


def format_answer(pattern: bytes, docs: list[int]) -> bytes:
    return pattern + b"\t" + " ".join(map(str, docs)).encode() + b"\n"


def cmd_build(args) -> int:
    names, coll = read_collection(args.input, args.input_mode, args.sep_byte)
    idx = build_index(coll, args.b, args.beta)
    size = indexfile.save(idx, args.output)
    if args.input_mode == "dir":
        Path(str(args.output) + ".names").write_text("".join(f"{name}\n" for name in names))
    for key, value in idx.space().items():
        print(f"{key}={value}")
    print(f"index_file_bytes={size}")
    return 0


def cmd_query(args) -> int:
    idx = indexfile.load(args.index)
    patterns = [os.fsencode(args.pattern)] if args.pattern is not None else read_patterns(args.patterns_file)
    out = sys.stdout.buffer
    for pattern in patterns:
        out.write(format_answer(pattern, run_query(idx, pattern, args.mode)))
    out.flush()
    return 0


def _spec_from_args(args, rate: float | None = None) -> SynthSpec:
    return SynthSpec(base_count=args.base_count, base_len=args.base_len,
                     variants_per_base=args.variants, mutation_rate=args.rate if rate is None else rate,
                     mode=args.mode, sigma=args.sigma, rng_seed=args.seed,
                     seed_text=args.seed_text)


def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    manifest = write_collection(spec, args.output)
    print(f"collection={args.output}")
    print(f"manifest={manifest}")
    if args.patterns_out:
        coll = generate(spec)
        rng = np.random.Generator(np.random.PCG64(args.seed + 1))
        pats = sample_patterns(coll, args.n_patterns, args.min_len, args.max_len, rng)
        Path(args.patterns_out).write_bytes(b"".join(p + b"\n" for p in pats))
        print(f"patterns={args.patterns_out}")
    return 0


def bench_rows(idx: Index, patterns: list[bytes], modes, repeat: int) -> list[dict]:
    rows = []
    for pattern in patterns:
        rng = pattern_range(idx.suffixes, idx.collection, pattern)
        occ = 0 if rng is None else rng[1] - rng[0] + 1
        for mode in modes:
            t0 = time.perf_counter()
            for _ in range(repeat):
                docs = run_query(idx, pattern, mode)
            elapsed = (time.perf_counter() - t0) / repeat
            rows.append({"pattern_len": len(pattern), "occ": occ, "docc": len(docs),
                         "mode": mode, "microseconds": f"{elapsed * 1e6:.2f}"})
    return rows


def cmd_bench(args) -> int:
    idx = indexfile.load(args.index)
    rows = bench_rows(idx, read_patterns(args.patterns_file), args.modes, args.repeat)
    writer = csv.DictWriter(sys.stdout, fieldnames=["pattern_len", "occ", "docc", "mode", "microseconds"],
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.figure:
        from .plotting import plot_bench
        plot_bench(rows, args.figure)
        print(f"# figure={args.figure}", file=sys.stderr)
    return 0


def trend_rows(args) -> list[dict]:
    rows = []
    for rate in args.rates:
        idx = build_index(generate(_spec_from_args(args, rate)), args.b, args.beta)
        space = idx.space()
        total = space["grammar_bytes"] + space["lists_bytes"]
        rows.append({"rate": rate, "n": space["n"], "d": space["d"],
                     "grammar_rules": space["grammar_rules"],
                     "grammar_bytes": space["grammar_bytes"], "lists_bytes": space["lists_bytes"],
                     "total_bytes": total, "bits_per_symbol": f"{8 * total / space['n']:.4f}"})
    return rows


def cmd_report(args) -> int:
    rows = trend_rows(args)
    writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.figure:
        from .plotting import plot_trend
        plot_trend(rows, args.figure)
        print(f"# figure={args.figure}", file=sys.stderr)
    return 0


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("version", "concat"), default="version")
    p.add_argument("--base-count", type=_positive_int, default=10)
    p.add_argument("--base-len", type=_positive_int, default=1000)
    p.add_argument("--variants", type=_positive_int, default=100)
    p.add_argument("--sigma", type=_positive_int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seed-text", help="take base documents from slices of this file")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcdoclist",
                                     description="Document listing over grammar-compressed document arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index file from a collection")
    p.add_argument("--input", required=True)
    p.add_argument("--input-mode", choices=("dir", "concat"), default="dir")
    p.add_argument("--sep-byte", type=_byte, default=DEFAULT_SEP_BYTE)
    p.add_argument("--b", type=_positive_int, default=512)
    p.add_argument("--beta", type=_beta, default=4.0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="list the documents containing patterns")
    p.add_argument("--index", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern")
    group.add_argument("--patterns-file")
    p.add_argument("--mode", choices=MODES, default="gcda")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("gen", help="write a synthetic repetitive collection")
    _add_spec_flags(p)
    p.add_argument("--rate", type=_rate, default=0.001)
    p.add_argument("--output", required=True)
    p.add_argument("--patterns-out", help="also sample query patterns into this file")
    p.add_argument("--n-patterns", type=int, default=1000)
    p.add_argument("--min-len", type=_positive_int, default=4)
    p.add_argument("--max-len", type=_positive_int, default=12)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time queries; CSV on stdout")
    p.add_argument("--index", required=True)
    p.add_argument("--patterns-file", required=True)
    p.add_argument("--repeat", type=_positive_int, default=3)
    p.add_argument("--modes", nargs="+", choices=MODES, default=list(MODES))
    p.add_argument("--figure", help="also render time vs occurrences to this image file")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="index size across mutation rates; CSV on stdout")
    _add_spec_flags(p)
    p.add_argument("--rates", type=_rate, nargs="+", default=[0.001, 0.003, 0.01, 0.03])
    p.add_argument("--b", type=_positive_int, default=512)
    p.add_argument("--beta", type=_beta, default=4.0)
    p.add_argument("--figure", help="also render the size breakdown to this image file")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocListError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Batch command-line front end.

Data goes to stdout, diagnostics to stderr.  Exit status: 0 on success, 1 on
a domain error (malformed word, size guard, size too small), 2 on a usage
error.  Every command is deterministic for a fixed argument vector; sampling
commands default to seed 0 rather than the clock.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .census import enumerate_difficult_pairs, enumerate_trees
from .errors import TreePairError
from .growth import growth_neighbors
from .rotations import (
    common_intervals,
    exact_distance,
    one_off_moves,
    parse_pair,
    reduce_pair,
    rotation_neighbors,
)
from .sampling import DEFAULT_SEED, sample_difficult_pair
from .stats import coverage_report
from .words import parse_word

__all__ = ["main"]


def _cmd_sample(args):
    for k in range(args.count):
        seed = args.seed + k
        pair = sample_difficult_pair(args.size, random.Random(seed))
        if args.format == "jsonl":
            print(json.dumps({"n": args.size, "s": pair.s, "t": pair.t, "seed": seed}))
        else:
            print(f"{pair.s} {pair.t}")
    return 0


def _verdict(pair):
    if pair.s == pair.t:
        return "not difficult: identical"
    commons = common_intervals(pair)
    if commons:
        lo, hi = min(commons)
        return f"not difficult: common ({lo},{hi})"
    moves = one_off_moves(pair)
    if moves:
        side, node, (lo, hi) = moves[0]
        return f"not difficult: one-off ({side},@{node})->({lo},{hi})"
    return "difficult"


def _pair_lines(path):
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line and not line.startswith("#"):
                yield line


def _cmd_check(args):
    if (args.pair is None) == (args.file is None):
        print("error: provide exactly one of PAIR or --file", file=sys.stderr)
        return 2
    if args.pair is not None:
        print(_verdict(parse_pair(args.pair)))
        return 0
    for line in _pair_lines(args.file):
        pair = parse_pair(line)
        print(f"{pair.s} {pair.t}: {_verdict(pair)}")
    return 0


def _cmd_distance(args):
    pair = parse_pair(args.pair)
    print(exact_distance(pair, max_size=args.max_size))
    return 0


def _cmd_reduce(args):
    outcome = reduce_pair(parse_pair(args.pair))
    print(f"# forced_moves={outcome.forced_moves} components={len(outcome.components)}")
    for s, t in outcome.components:
        print(f"{s} {t}")
    return 0


def _cmd_enumerate(args):
    override = {} if args.max_size is None else {"max_size": args.max_size}
    if args.difficult:
        pairs = enumerate_difficult_pairs(args.size, **override)
        print(f"# n={args.size} count={len(pairs)}")
        for s, t in pairs:
            print(f"{s} {t}")
    else:
        trees = enumerate_trees(args.size, **override)
        print(f"# n={args.size} count={len(trees)}")
        for word in trees:
            print(word)
    return 0


def _cmd_neighbors(args):
    word = parse_word(args.word)
    found = growth_neighbors(word) if args.growth else rotation_neighbors(word)
    for neighbor in sorted(found):
        print(neighbor)
    return 0


def _cmd_coverage(args):
    report = coverage_report(args.size, args.samples, random.Random(args.seed))
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text(include_frequencies=args.frequencies))
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="treepairs",
        description="Sample and analyse difficult tree pairs under rotation distance.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw difficult pairs of a given size")
    p.add_argument("--size", type=int, required=True, help="tree size n (>= 4)")
    p.add_argument("--count", type=int, default=1, help="number of pairs")
    p.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"seed of the first pair; pair k uses seed+k (default: {DEFAULT_SEED})",
    )
    p.add_argument("--format", choices=("words", "jsonl"), default="words")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("check", help="report difficulty or a reducing witness")
    p.add_argument("pair", nargs="?", help='pair as one argument: "WORD WORD"')
    p.add_argument("--file", help="newline-delimited pair file, # comments ignored")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("distance", help="exact rotation distance (exhaustive search)")
    p.add_argument("pair", help='pair as one argument: "WORD WORD"')
    p.add_argument("--max-size", type=int, default=12, help="search size guard")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("reduce", help="forced moves and difficult components")
    p.add_argument("pair", help='pair as one argument: "WORD WORD"')
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("enumerate", help="census of trees or difficult pairs")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--difficult", action="store_true", help="list difficult pairs")
    p.add_argument("--max-size", type=int, default=None, help="override the census guard")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("neighbors", help="rotation or growth neighbors of a tree")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--rotation", action="store_true", help="rotation neighbors (default)")
    group.add_argument("--growth", action="store_true", help="growth neighbors")
    p.set_defaults(func=_cmd_neighbors)

    p = sub.add_parser("coverage", help="sampling coverage report at one size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"(default: {DEFAULT_SEED})"
    )
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.add_argument("--frequencies", action="store_true", help="include per-pair counts")
    p.set_defaults(func=_cmd_coverage)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TreePairError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    wellpath count --family positive --n 7
    wellpath enumerate --family marked-trees --n 3
    wellpath map --from path --to matching --marked < paths.jsonl
    wellpath sample --family positive --n 5 --count 10 --seed 1
    wellpath verify --suite roundtrip --max-n 6
    wellpath volume --n 4 --samples 1000000 --seed 7

Objects are read and written as JSON lines.  Exit status is 2 for flag
errors, 1 for failed verification or invalid input, 0 otherwise.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Callable, Sequence

from wellpath import bijections as bj
from wellpath import counting, jsonio, verify
from wellpath.errors import WellPathError
from wellpath.matchings import enumerate_matchings, random_matching
from wellpath.polytope import mc_estimate
from wellpath.trees import enumerate_marked_trees, enumerate_trees

KINDS = ("path", "tree", "matching")


def _default_seed() -> int:
    raw = os.environ.get("WELLPATH_SEED")
    return int(raw) if raw else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wellpath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print an exact count")
    p.add_argument("--family", required=True,
                   choices=["motzkin", "positive", "positive-updown", "dyck-updown"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="number of horizontal steps (path families only)")

    p = sub.add_parser("enumerate", help="list every object of a family as JSON lines")
    p.add_argument("--family", required=True,
                   choices=["motzkin", "positive", "trees", "marked-trees", "matchings"])
    p.add_argument("--n", type=int, required=True,
                   help="size; for matchings the ground set is [2n]")

    p = sub.add_parser("map", help="apply a bijection to JSON lines on stdin")
    p.add_argument("--from", dest="source", required=True, choices=KINDS)
    p.add_argument("--to", dest="target", required=True, choices=KINDS)
    p.add_argument("--marked", action="store_true",
                   help="positive paths / marked trees / matchings on [2n]")

    p = sub.add_parser("sample", help="uniform random paths via random matchings")
    p.add_argument("--family", choices=["positive", "motzkin"], default="positive")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="default: $WELLPATH_SEED or 0")

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("volume", help="Monte Carlo estimate of the polytope volume")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=None, help="default: $WELLPATH_SEED or 0")
    return parser


# path <-> tree <-> matching, indexed by (marked, source, target)
_FORWARD: dict[tuple[bool, str, str], Callable] = {
    (False, "path", "tree"): bj.phi,
    (False, "tree", "matching"): bj.psi,
    (False, "tree", "path"): bj.phi_inv,
    (False, "matching", "tree"): bj.psi_inv,
    (True, "path", "tree"): bj.phi_prime,
    (True, "tree", "matching"): bj.psi_prime,
    (True, "tree", "path"): bj.phi_prime_inv,
    (True, "matching", "tree"): bj.psi_prime_inv,
}


def _composite(marked: bool, source: str, target: str) -> Callable:
    i, j = KINDS.index(source), KINDS.index(target)
    step = 1 if j > i else -1
    fns = [_FORWARD[(marked, KINDS[a], KINDS[a + step])] for a in range(i, j, step)]

    def apply(obj):
        for f in fns:
            obj = f(obj)
        return obj

    return apply


def _cmd_count(args) -> int:
    fam, n, k = args.family, args.n, args.k
    if k is not None and fam not in ("motzkin", "positive"):
        raise _UsageError("--k only applies to the motzkin and positive families")
    if fam == "motzkin":
        value = counting.count_motzkin(n) if k is None else counting.count_motzkin_refined(n, k)
    elif fam == "positive":
        value = counting.count_positive(n) if k is None else counting.count_positive_refined(n, k)
    elif fam == "positive-updown":
        value = counting.count_positive_updown(n)
    else:
        value = counting.count_dyck_updown(n)
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    gens = {
        "motzkin": counting.enumerate_motzkin,
        "positive": counting.enumerate_positive,
        "trees": enumerate_trees,
        "marked-trees": enumerate_marked_trees,
        "matchings": enumerate_matchings,
    }
    n = args.n
    if args.family == "trees" and n < 1:
        return 0
    write = sys.stdout.write
    for obj in gens[args.family](n):
        write(jsonio.dumps(obj) + "\n")
    return 0


def _cmd_map(args, stdin) -> int:
    fn = _composite(args.marked, args.source, args.target)
    for lineno, line in enumerate(stdin, start=1):
        if not line.strip():
            continue
        try:
            obj = jsonio.loads(line, args.source, args.marked)
            result = fn(obj)
        except (WellPathError, json.JSONDecodeError) as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            return 1
        sys.stdout.write(jsonio.dumps(result) + "\n")
    return 0


def _cmd_sample(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    rng = random.Random(seed)
    n = args.n
    for _ in range(args.count):
        if args.family == "positive":
            path = bj.phi_prime_inv(bj.psi_prime_inv(random_matching(n, rng)))
        else:
            path = bj.phi_inv(bj.psi_inv(random_matching(n - 1, rng)))
        sys.stdout.write(jsonio.dumps(path) + "\n")
    return 0


def _cmd_verify(args) -> int:
    checks = verify.SUITES[args.suite](args.max_n)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def _cmd_volume(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    est = mc_estimate(args.n, args.samples, seed)
    print(json.dumps({
        "n": est.n,
        "samples": est.samples,
        "estimate": est.estimate,
        "std_error": est.std_error,
        "exact": str(est.exact),
        "exact_value": float(est.exact),
        "z": est.z_score,
    }, separators=(",", ":"), sort_keys=True))
    return 0


class _UsageError(Exception):
    pass


_MIN_N = {
    ("count", "positive-updown"): 1,
    ("count", "dyck-updown"): 2,
    ("sample", "positive"): 1,
    ("sample", "motzkin"): 2,
    ("volume", None): 1,
}


def _validate_sizes(args) -> None:
    if args.command in ("count", "enumerate", "sample", "volume"):
        low = _MIN_N.get((args.command, getattr(args, "family", None)), 0)
        if args.n < low:
            raise _UsageError(f"--n must be at least {low}")
    if args.command == "verify" and args.max_n < 1:
        raise _UsageError("--max-n must be at least 1")
    if args.command == "volume" and args.samples < 1:
        raise _UsageError("--samples must be at least 1")
    if args.command == "sample" and args.count < 0:
        raise _UsageError("--count must be nonnegative")


def main(argv: Sequence[str] | None = None, stdin=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_sizes(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "map":
            return _cmd_map(args, stdin if stdin is not None else sys.stdin)
        if args.command == "sample":
            return _cmd_sample(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_volume(args)
    except _UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Command-line front end.

Subcommands expose the library with deterministic, scriptable output:

    shipat covers --path UUDUDD --dir lower --method both
    shipat count-avoiders --family tv --k 5 --n-max 13 --method closed
    shipat zeta --path UDUDUD
    shipat poset --max-size 4 --format dot
    shipat region --area 0,0,1
    shipat verify --suite all --n-max 7

Exit codes: 0 success, 1 check or resource failure, 2 usage or parse error,
3 method disagreement in ``both`` mode.
"""

from __future__ import annotations

import argparse
import sys

from . import avoidance, covers, poset, verify
from .core import ShiTableau, parse_path, region_inequalities


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shipat",
        description="Pattern order on Shi tableaux / Dyck paths")
    sub = parser.add_subparsers(dest="command", required=True)

    p_covers = sub.add_parser("covers", help="list or count covers of a path")
    p_covers.add_argument("--path", required=True)
    p_covers.add_argument("--dir", required=True, choices=["lower", "upper"])
    p_covers.add_argument("--method", default="brute",
                          choices=["brute", "closed", "both"])

    p_av = sub.add_parser("count-avoiders", help="avoider counts per tableau size")
    p_av.add_argument("--family", required=True, choices=list(avoidance.FAMILY_TAGS))
    p_av.add_argument("--k", type=int, required=True)
    p_av.add_argument("--n-max", type=int, required=True)
    p_av.add_argument("--method", default="closed",
                      choices=["brute", "closed", "both"])
    p_av.add_argument("--format", default="csv", choices=["csv", "oeis"])
    p_av.add_argument("--jobs", type=int, default=1)

    p_zeta = sub.add_parser("zeta", help="apply the zeta map")
    p_zeta.add_argument("--path", required=True)

    p_poset = sub.add_parser("poset", help="emit the cover graph")
    p_poset.add_argument("--max-size", type=int, required=True)
    p_poset.add_argument("--format", default="dot", choices=["dot"])
    p_poset.add_argument("--max-nodes", type=int, default=None)

    p_region = sub.add_parser("region", help="Shi region inequalities of a tableau")
    p_region.add_argument("--area", required=True,
                          help="comma-separated area vector, e.g. 0,0,1")

    p_verify = sub.add_parser("verify", help="run the oracle-equivalence suites")
    p_verify.add_argument("--suite", default="all",
                          choices=["core", "covers", "avoidance", "all"])
    p_verify.add_argument("--n-max", type=int, default=7)
    p_verify.add_argument("--jobs", type=int, default=1)

    return parser


def _cmd_covers(args) -> int:
    try:
        path = parse_path(args.path)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    brute_set = closed = None
    if args.method in ("brute", "both"):
        brute_set = sorted(
            q.word for q in (poset.lower_covers(path) if args.dir == "lower"
                             else poset.upper_covers(path)))
    if args.method in ("closed", "both"):
        try:
            closed = (covers.count_lower_covers(path) if args.dir == "lower"
                      else covers.count_upper_covers(path))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if args.method == "brute":
        for word in brute_set:
            print(word)
    elif args.method == "closed":
        print(closed)
    else:
        print(f"count_closed,{closed}")
        print(f"count_brute,{len(brute_set)}")
        if closed != len(brute_set):
            print("DISAGREE")
            return 3
        print("AGREE")
    return 0


def _cmd_count_avoiders(args) -> int:
    if args.k < 2:
        print("error: --k must be >= 2", file=sys.stderr)
        return 2
    if args.format == "oeis" and args.method == "both":
        print("error: oeis format needs a single method", file=sys.stderr)
        return 2
    q = avoidance.pattern(args.family, args.k)
    rows = []
    disagree = False
    for n in range(args.n_max + 1):
        closed = brute = None
        if args.method in ("closed", "both"):
            closed = avoidance.count_avoiders_closed(args.family, args.k, n)
        if args.method in ("brute", "both"):
            try:
                brute = avoidance.count_avoiders_brute(q, n, jobs=args.jobs)
            except poset.ResourceLimit as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
        rows.append((n, closed, brute))
        if args.method == "both" and closed != brute:
            disagree = True
    if args.format == "oeis":
        counts = [closed if args.method == "closed" else brute
                  for _, closed, brute in rows]
        sys.stdout.write(avoidance.sequence_oeis(counts))
        return 0
    if args.method == "both":
        print("n,count,count_brute,agree")
        for n, closed, brute in rows:
            status = "AGREE" if closed == brute else "DISAGREE"
            print(f"{n},{closed},{brute},{status}")
        return 3 if disagree else 0
    print("n,count")
    for n, closed, brute in rows:
        print(f"{n},{closed if args.method == 'closed' else brute}")
    return 0


def _cmd_zeta(args) -> int:
    try:
        path = parse_path(args.path)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(avoidance.zeta(path).word)
    return 0


def _cmd_poset(args) -> int:
    try:
        graph = poset.hasse(args.max_size, max_nodes=args.max_nodes)
    except poset.ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(poset.export_dot(graph))
    return 0


def _cmd_region(args) -> int:
    try:
        area = tuple(int(chunk) for chunk in args.area.split(","))
        tableau = ShiTableau(area)
        lines = region_inequalities(tableau)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, n_max=args.n_max, jobs=args.jobs)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "covers": _cmd_covers,
        "count-avoiders": _cmd_count_avoiders,
        "zeta": _cmd_zeta,
        "poset": _cmd_poset,
        "region": _cmd_region,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Probe the randomized regular-girth construction over a parameter grid.

For each (degree, girth) pair, tries a range of vertex counts above the
Moore bound and reports build time, verified girth, or explicit failure.
"""
import argparse
import sys
import time

from systolic import GirthSearchError, construct_regular_girth, girth, moore_bound


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--pairs", default="3:5,3:6,3:7,5:5,7:4,7:5",
        help="comma-separated degree:girth pairs",
    )
    parser.add_argument("--sizes-per-pair", type=int, default=4)
    args = parser.parse_args()

    print("degree,girth,vertices,moore,built,verified_girth,seconds")
    for chunk in args.pairs.split(","):
        degree, target = map(int, chunk.split(":"))
        floor = moore_bound(degree, target)
        start_n = floor if (floor * degree) % 2 == 0 else floor + 1
        sizes = [start_n + 2 * i * max(1, floor // 4) for i in range(args.sizes_per_pair)]
        for n in sizes:
            begin = time.monotonic()
            try:
                graph = construct_regular_girth(degree, target, n, seed=args.seed)
                elapsed = time.monotonic() - begin
                print(f"{degree},{target},{n},{floor},true,{girth(graph)},{elapsed:.3f}")
            except GirthSearchError:
                elapsed = time.monotonic() - begin
                print(f"{degree},{target},{n},{floor},false,,{elapsed:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

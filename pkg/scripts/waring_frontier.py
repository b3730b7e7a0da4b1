#!/usr/bin/env python3
"""Worst-case fourth-power counts by decade, up to a configurable limit.

Shows how quickly the minimal part count settles under the uniform cap of
19 and which integers attain each decade's maximum.
"""
import argparse
import sys

from systolic import verify_g4


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=10 ** 6)
    args = parser.parse_args()

    print("limit,max_count,first_argmax,argmax_count,within_19")
    limit = 10
    while limit <= args.limit:
        report = verify_g4(limit)
        print(
            f"{limit},{report.max_count},{report.argmax[0]},"
            f"{len(report.argmax)},{str(report.within_19).lower()}"
        )
        limit *= 10
    return 0


if __name__ == "__main__":
    sys.exit(main())

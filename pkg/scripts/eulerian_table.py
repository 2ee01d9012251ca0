#!/usr/bin/env python3
"""Print second Eulerian rows, marking which rows came from enumeration."""

import argparse

from ehrcomb.stirlingperm import ENUMERATION_THRESHOLD, second_eulerian_with_path


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("rows", type=int, nargs="?", default=10)
    ap.add_argument("--threshold", type=int, default=ENUMERATION_THRESHOLD,
                    help="largest n computed by enumerating Stirling permutations")
    args = ap.parse_args()
    for n in range(1, args.rows + 1):
        row, path = second_eulerian_with_path(n, args.threshold)
        print(f"{n:>3}  {path:<11}  {' '.join(map(str, row))}")


if __name__ == "__main__":
    main()

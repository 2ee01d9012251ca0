#!/usr/bin/env python3
"""Tabulate linear coefficients of pyramids over combs next to the comb values.

Exploratory only: the pyramid columns carry no asserted closed form.
"""

import argparse

from ehrcomb.exactpoly import rational_str
from ehrcomb.identities import explore_pyramid
from ehrcomb.numbers import bernoulli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print(f"{'n':>3}  {'pyr shifted':>14}  {'pyr unshifted':>14}  {'B_n/n':>10}")
    for row in explore_pyramid(args.max_n):
        n = row["n"]
        print(f"{n:>3}  {rational_str(row['shifted']):>14}  {rational_str(row['unshifted']):>14}"
              f"  {rational_str(bernoulli(n) / n):>10}")


if __name__ == "__main__":
    main()

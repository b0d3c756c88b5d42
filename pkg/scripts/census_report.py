#!/usr/bin/env python3
"""Slice census over a parameter grid: how many maximal non-intertwining
collections exist, and how many of them are slices."""

import argparse

from interlace.census import count_triangulations, slice_census
from interlace.errors import GuardError


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=9)
    parser.add_argument("--max-atoms", type=int, default=40)
    args = parser.parse_args()

    for n in range(4, args.n_max + 1):
        for l in (2, 3):
            if n < 2 * l:
                continue
            try:
                census = slice_census(n, l, max_atoms=args.max_atoms)
            except GuardError as err:
                print(f"(n,l)=({n},{l}): skipped ({err.detail})")
                continue
            total = len(census.slices) + len(census.non_slices)
            line = f"(n,l)=({n},{l}): {total} maximal, {len(census.slices)} slices"
            if l == 2:
                line += f" [triangulation oracle: {count_triangulations(n)}]"
            print(line)
            if census.non_slices:
                sample = census.non_slices[0]
                print("  first non-slice:", [list(m.elements) for m in sample])


if __name__ == "__main__":
    main()

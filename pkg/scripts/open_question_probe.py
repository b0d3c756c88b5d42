#!/usr/bin/env python3
"""Probe the open question: is the maximal size of a non-l-intertwining
collection inside the l-ple k-intervals always C(k-1, l-1) * C(n-k-1, l-1)?

Enumerates every inclusion-maximal collection on a small grid and prints
the size histogram next to the conjectured bound.  A maximum above the
bound would be a discovery; it is flagged loudly, never suppressed.
"""

import argparse

from interlace.census import enum_maximal_non_l_intertwining
from interlace.errors import GuardError


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--max-atoms", type=int, default=60)
    args = parser.parse_args()

    for n in range(4, args.n_max + 1):
        for l in (2, 3):
            for k in range(l, n - l + 1):
                try:
                    rep = enum_maximal_non_l_intertwining(n, k, l, max_atoms=args.max_atoms)
                except GuardError as err:
                    print(f"(n,k,l)=({n},{k},{l}): skipped ({err.detail})")
                    continue
                verdict = "matches conjecture" if rep.max_size == rep.conjectured_max else (
                    "*** EXCEEDS CONJECTURE ***" if rep.max_size > rep.conjectured_max
                    else "below conjecture"
                )
                print(
                    f"(n,k,l)=({n},{k},{l}): max={rep.max_size} "
                    f"conjectured={rep.conjectured_max} ({verdict}); "
                    f"histogram={dict(sorted(rep.histogram.items()))}"
                )
                if rep.max_size > rep.conjectured_max:
                    print("  witness:", [list(m.elements) for m in rep.max_witnesses[0]])


if __name__ == "__main__":
    main()

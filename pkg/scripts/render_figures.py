#!/usr/bin/env python3
"""Emit DOT files for the worked quivers (grid, preprojective, strip,
mutated) into a directory, ready for graphviz."""

import argparse
from pathlib import Path

from interlace.quivers import LabeledQuiver, build_higher_A_quiver, tensor_quiver
from interlace.serialize import quiver_to_dot
from interlace.strip import apr_mutate, gamma_quiver, strip_category


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--l", type=int, default=3)
    parser.add_argument("--out", default="figures")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n, k, l = args.n, args.k, args.l

    (out / "higher_a.dot").write_text(
        quiver_to_dot(build_higher_A_quiver(n - 2 * l + 1, l - 1), "higher_a")
    )
    (out / "tensor.dot").write_text(quiver_to_dot(tensor_quiver(n, k, l), "tensor"))
    (out / "gamma.dot").write_text(quiver_to_dot(gamma_quiver(n, k, l), "gamma"))
    strip = strip_category(n, k, l)
    strip_quiver = LabeledQuiver(
        tuple(sorted(o.iota.elements for o in strip.objects)), strip.arrows
    )
    (out / "strip.dot").write_text(quiver_to_dot(strip_quiver, "strip"))
    (out / "apr.dot").write_text(quiver_to_dot(apr_mutate(n, k, l), "apr"))
    print(f"wrote 5 DOT files to {out}/")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""How much of a top class R_i can a single adjoined element regenerate?

For each class R_i of rank-(n−1) elements, remove R_i from FI_n, adjoin one
element α ∈ R_i back, and count which members of R_i the enlarged set can
reach.  The counts stay well below |R_i| for the 16-element classes — the
computational heart of the minimal-generating-set lower bound.

Usage: python scripts/adjoin_sweep.py --n 9
"""

import argparse
from collections import Counter

from fenceinj import enumerate_FI, r_class
from fenceinj.analysis import _domain_key, _top_layer_fixpoint


def sweep(n: int) -> None:
    universe = enumerate_FI(n, workers=2)
    top_rows = [tuple(int(v) for v in row)
                for row in universe.images_matrix[universe.ranks >= n - 1]]
    print(f"n = {n}: rank-≥(n−1) layer has {len(top_rows)} elements")
    for i in range(1, (n + 1) // 2 + 1):
        cls = r_class(n, i, universe)
        doms = {frozenset(range(1, n + 1)) - {i},
                frozenset(range(1, n + 1)) - {n - i + 1}}
        in_class = [r for r in top_rows if _domain_key(r) in doms]
        outside = {r for r in top_rows if _domain_key(r) not in doms}
        counts = Counter()
        for a in in_class:
            reached = _top_layer_fixpoint(outside | {a}, n - 1)
            counts[sum(1 for r in reached if _domain_key(r) in doms)] += 1
        profile = ", ".join(f"{k} reachable ×{v}"
                            for k, v in sorted(counts.items()))
        print(f"  R_{i} (|R_{i}| = {len(cls)}): {profile}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[5, 7, 9])
    args = parser.parse_args()
    for n in args.n:
        sweep(n)


if __name__ == "__main__":
    main()

"""Compare 2n - k with the exhaustive minimum word length on small double-arborescences."""

import argparse
from collections import Counter

from doublearb.lab import enumerate_connected_graphs
from doublearb.orientation import double_arborescence_orientation, longest_chain
from doublearb.wordrep import brute_force_min_length


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--unlabeled", action="store_true", help="one graph per isomorphism class")
    args = parser.parse_args()

    bad = 0
    for n in range(1, args.max_n + 1):
        lengths: Counter = Counter()
        for g in enumerate_connected_graphs(n, dedup=args.unlabeled):
            o = double_arborescence_orientation(g)
            if o is None:
                continue
            k = len(longest_chain(o))
            length, _ = brute_force_min_length(g, 2 * n)
            lengths[(k, length)] += 1
            if length != 2 * n - k:
                bad += 1
                print("mismatch:", g.edges(), "k =", k, "found", length)
        summary = ", ".join(f"k={k}: len {ln} x{c}" for (k, ln), c in sorted(lengths.items()))
        print(f"n={n}: {sum(lengths.values())} double-arborescences; {summary}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

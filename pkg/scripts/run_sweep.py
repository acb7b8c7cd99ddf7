"""Crosscheck every connected labeled graph up to a given size and print class counts."""

import argparse
import time

from doublearb.lab import MAX_ENUM_N, sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, help=f"largest size, at most {MAX_ENUM_N}")
    args = parser.parse_args()

    print(f"{'n':>2} {'graphs':>9} {'dh':>8} {'treelike':>9} {'double-arb':>11} {'arb':>7} {'bad':>4} {'secs':>7}")
    total_bad = 0
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        s = sweep(n)
        c = s.counts
        total_bad += len(s.mismatches)
        print(f"{n:>2} {s.graphs:>9} {c['dh']:>8} {c['treelike']:>9} "
              f"{c['double_arborescence']:>11} {c['arborescence']:>7} "
              f"{len(s.mismatches):>4} {time.perf_counter() - start:>7.1f}")
        for g, msgs in s.mismatches[:5]:
            print("   ", g.edges(), msgs)
    raise SystemExit(1 if total_bad else 0)


if __name__ == "__main__":
    main()

"""Build minimum words for random (double-)arborescences and tabulate |w| against 2n - k."""

import argparse

from doublearb.lab import GenConfig, SplitMix64, gen_arborescence, gen_double_arborescence
from doublearb.orientation import arborescence_orientation, double_arborescence_orientation, longest_chain
from doublearb.wordrep import algorithm1_minword, double_arb_minword, represents


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=20)
    parser.add_argument("--max-n", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--strict", action="store_true", help="strict double-arborescences only")
    args = parser.parse_args()

    rng = SplitMix64(args.seed)
    print(f"{'kind':<5} {'n':>4} {'k':>4} {'|w|':>5} {'2n-k':>5} ok")
    bad = 0
    for i in range(args.count):
        double = args.strict or i % 2 == 1
        lo = 5 if args.strict else 1
        cfg = GenConfig(rng.between(lo, args.max_n), seed=args.seed * 100_003 + i, strict=args.strict)
        if double:
            g, _ = gen_double_arborescence(cfg)
            o = double_arborescence_orientation(g)
            k = len(longest_chain(o))
            w = double_arb_minword(o)
        else:
            g, _ = gen_arborescence(cfg)
            p = arborescence_orientation(g)
            chain = longest_chain(p)
            k = len(chain)
            w = algorithm1_minword(p, chain)
        ok = len(w) == 2 * g.n - k and bool(represents(w, g))
        bad += not ok
        print(f"{'darb' if double else 'arb':<5} {g.n:>4} {k:>4} {len(w):>5} {2 * g.n - k:>5} {'yes' if ok else 'NO'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

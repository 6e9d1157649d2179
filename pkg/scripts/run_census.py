"""Q-class census by order, with uniqueness checks for named families.

    python3 scripts/run_census.py [--max-order 7] [--workers 4] [--order-8]
"""
import argparse
import time

from scpoly import families as fam
from scpoly.census import HARD_MAX_ORDER, DEFAULT_MAX_ORDER, count_graphs_burnside, q_classes, verify_q_unique

NAMED = [("K", fam.complete, 1), ("P", fam.path, 1), ("C", fam.cycle, 3), ("K_1,", fam.star, 1),
         ("C_3^", fam.friendship, 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--order-8", action="store_true", help="include order 8 (about half a minute)")
    args = ap.parse_args()
    top = HARD_MAX_ORDER if args.order_8 else min(args.max_order, DEFAULT_MAX_ORDER)
    limit = HARD_MAX_ORDER if args.order_8 else DEFAULT_MAX_ORDER

    print(f"{'n':>2} {'graphs':>7} {'burnside':>8} {'classes':>7} {'largest':>7} {'shared':>6} {'secs':>6}")
    for n in range(top + 1):
        t = time.perf_counter()
        s = q_classes(n, limit, args.workers).summary()
        print(f"{n:>2} {s['graphs']:>7} {count_graphs_burnside(n):>8} {s['classes']:>7} "
              f"{s['largest_class']:>7} {len(s['non_singleton_classes']):>6} {time.perf_counter() - t:>6.1f}")

    print("\nnamed families")
    for prefix, build, lo in NAMED:
        for p in range(lo, top + 1):
            g = build(p)
            if g.n > top:
                break
            rep = verify_q_unique(g, limit, args.workers)
            note = "" if rep.unique else "  shares Q with " + " ".join(rep.co_members)
            print(f"  {prefix}{p}: {'unique' if rep.unique else 'NOT unique'}{note}")


if __name__ == "__main__":
    main()

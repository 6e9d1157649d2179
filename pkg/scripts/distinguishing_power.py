"""Compare Q, characteristic, matching and Tutte polynomials on graph pairs.

Default pairs are the fans F_n against F_{n-1}^+ and the two F_4 attachments.
Extra pairs can be given as graph6 or edge-list strings.

    python3 scripts/distinguishing_power.py [--pair A B ...]
"""
import argparse

from scpoly import families as fam
from scpoly.classic import compare_powers
from scpoly.graphio import parse_graph, to_graph6


def default_pairs():
    for n in (5, 6, 7):
        yield f"F_{n} vs F_{n - 1}^+", fam.fan(n), fam.fan_plus(n)
    g1, g2 = fam.fig4_pair()
    yield "F_4 attachments", g1, g2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pair", nargs=2, action="append", metavar=("A", "B"), default=[])
    args = ap.parse_args()
    pairs = list(default_pairs())
    pairs += [(f"{a} vs {b}", parse_graph(a), parse_graph(b)) for a, b in args.pair]
    for label, g, h in pairs:
        print(f"{label}  ({to_graph6(g)}, {to_graph6(h)})")
        for line in compare_powers(g, h).table().splitlines():
            print("  " + line)


if __name__ == "__main__":
    main()

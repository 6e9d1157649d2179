"""Search single-vertex attachments to the fan F_4 for Q-equivalent, non-isomorphic pairs.

    python3 scripts/fig4_search.py [--sizes 1 2 3]
"""
import argparse

from scpoly import families as fam
from scpoly.classic import all_polys
from scpoly.graph import are_isomorphic
from scpoly.graphio import to_graph6
from scpoly.qpoly import q_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[2], help="neighbourhood sizes of the new vertex")
    args = ap.parse_args()
    found = fam.search_fig4_pair(tuple(args.sizes))
    print(f"{len(found)} graph(s) found")
    for g in found:
        print(f"\n{to_graph6(g)}  edges={sorted(g.edges())}")
        for name, poly in all_polys(g).items():
            print(f"  {name}: {poly}")
    for i, g in enumerate(found):
        for h in found[i + 1:]:
            same_q = q_poly(g) == q_poly(h)
            print(f"\n{to_graph6(g)} vs {to_graph6(h)}: Q equal={same_q} isomorphic={are_isomorphic(g, h)}")


if __name__ == "__main__":
    main()

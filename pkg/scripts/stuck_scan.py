"""Which k-hole sets defeat the criterion?  Scans k-subsets of a group's
standard matrix and classifies the stuck ones as a deleted row, a deleted
column, every cell of one symbol, or other."""
import argparse
import collections

from quadrecon.algebra import cayley_matrix_of, make_group
from quadrecon.oracle import find_stuck_hole_sets


def classify(m, holes):
    rows = {r for r, _ in holes}
    cols = {c for _, c in holes}
    syms = {m[h] for h in holes}
    n = m.n
    if len(rows) == 1 and len(holes) == n:
        return "row"
    if len(cols) == 1 and len(holes) == n:
        return "column"
    if len(syms) == 1 and len(holes) == n:
        return "symbol"
    return "other"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="c5")
    ap.add_argument("-k", type=int, default=None, help="hole count (default n)")
    ap.add_argument("--samples", type=int, default=None, help="sample instead of enumerating")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=5, help="print this many 'other' sets")
    args = ap.parse_args()

    G = make_group(args.group)
    m = cayley_matrix_of(G)
    k = G.order if args.k is None else args.k
    scan = find_stuck_hole_sets(m, k, samples=args.samples, seed=args.seed)
    kinds = collections.Counter(classify(m, h) for h in scan.hole_sets)
    print(f"{G.name} k={k}: examined {scan.examined}, exhaustive={scan.exhaustive}, "
          f"stuck {len(scan.hole_sets)}: {dict(kinds)}")
    others = [sorted(h) for h in scan.hole_sets if classify(m, h) == "other"]
    for h in others[:args.show]:
        print("  ", [tuple(c) for c in h])


if __name__ == "__main__":
    main()

"""Success rate of quadrangle-only against quadrangle-plus-Latin filling as
the number of holes grows past n-1.  Row-major order, saturation not used."""
import argparse
import itertools
import random

from quadrecon.algebra import cayley_matrix_of, make_group
from quadrecon.reconstructor import Mode, reconstruct
from quadrecon.tables import punch


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="c6")
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    G = make_group(args.group)
    m = cayley_matrix_of(G)
    n = G.order
    cells = list(itertools.product(range(n), repeat=2))
    rng = random.Random(args.seed)
    print(f"{G.name}: holes  quadrangle  quadrangle+latin")
    for k in range(n - 1, 2 * n + 2):
        wins = {mode: 0 for mode in Mode}
        for _ in range(args.trials):
            p = punch(m, rng.sample(cells, k))
            for mode in Mode:
                wins[mode] += reconstruct(p, mode=mode).complete
        q, ql = (wins[mode] / args.trials for mode in Mode)
        print(f"{k:>10}  {q:>10.3f}  {ql:>16.3f}")


if __name__ == "__main__":
    main()

"""Random sweep: punch <= n-1 holes from Cayley matrices (random enumerations)
and reconstruct in random orders.  Prints one line per group."""
import argparse
import itertools
import random
import time

from quadrecon.algebra import CATALOG, cayley_matrix_of, make_group
from quadrecon.reconstructor import reconstruct
from quadrecon.tables import punch


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", nargs="*", default=list(CATALOG.values()))
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--orders", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for spec in args.groups:
        G = make_group(spec)
        n = G.order
        rng = random.Random(f"{args.seed}-{spec}")
        cells = list(itertools.product(range(n), repeat=2))
        ok = runs = 0
        t = time.perf_counter()
        for _ in range(args.trials):
            m = cayley_matrix_of(G, rng.sample(range(n), n), rng.sample(range(n), n))
            holes = rng.sample(cells, rng.randint(1, max(1, n - 1)))
            p = punch(m, holes)
            for _ in range(args.orders):
                rng.shuffle(holes)
                rep = reconstruct(p, holes)
                runs += 1
                ok += rep.complete and rep.grid.to_matrix() == m
        print(f"{G.name:>10}  n={n:<3} {ok}/{runs} complete  {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()

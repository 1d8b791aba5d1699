"""Weak tree layouts: area of the plain and heavy-path algorithms on random trees."""

import argparse
import math
import random
from dataclasses import dataclass

from rectlay.families import harness_seed, random_tree
from rectlay.layout import area
from rectlay.trees import heavy_path_partition, layout_tree_A, layout_tree_B


@dataclass
class Config:
    sizes: tuple[int, ...] = (10, 100, 1000, 10000)
    trials: int = 10
    seed: int = harness_seed()


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    for n in cfg.sizes:
        a = b = 0
        for _ in range(cfg.trials):
            t = random_tree(n, rng)
            a += area(layout_tree_A(t))
            b += area(layout_tree_B(t, heavy_path_partition(t)))
        yield n, a / cfg.trials, b / cfg.trials, n * (math.floor(math.log2(n)) + 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    print(f"{'n':>6} {'plain':>12} {'heavy path':>12} {'n(log n+1)':>12}")
    for n, pa, pb, bound in run(Config(tuple(a.sizes), a.trials, a.seed)):
        print(f"{n:>6} {pa:12.0f} {pb:12.0f} {bound:12d}")


if __name__ == "__main__":
    main()

"""Area of pipeline layouts on random layoutable graphs, as area / n^2 per size."""

import argparse
import random
from dataclasses import dataclass

from rectlay.families import harness_seed, random_layoutable_graph
from rectlay.layout import area, validate_layout
from rectlay.pipeline import layout_graph


@dataclass
class Config:
    sizes: tuple[int, ...] = (10, 20, 40, 80, 160)
    trials: int = 20
    seed: int = harness_seed()


def run(cfg: Config) -> list[tuple[int, float, float]]:
    rng = random.Random(cfg.seed)
    rows = []
    for n in cfg.sizes:
        ratios = []
        for _ in range(cfg.trials):
            g = random_layoutable_graph(n, rng)
            l = layout_graph(g)
            assert validate_layout(l, g).ok
            ratios.append(area(l) / n ** 2)
        rows.append((n, sum(ratios) / len(ratios), max(ratios)))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    print(f"{'n':>6} {'mean':>8} {'max':>8}")
    for n, mean, worst in run(Config(tuple(a.sizes), a.trials, a.seed)):
        print(f"{n:>6} {mean:8.3f} {worst:8.3f}")


if __name__ == "__main__":
    main()

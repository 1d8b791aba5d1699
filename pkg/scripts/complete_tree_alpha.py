"""Complete ternary trees: layout dimensions, area per vertex, and the growth exponent
of the longer side against the limit value for each level pattern (m, l)."""

import argparse
import math
from dataclasses import dataclass

from rectlay.trees import alpha_of, complete_tree_dims


@dataclass
class Config:
    max_depth: int = 12
    patterns: tuple[tuple[int, int], ...] = ((1, 0), (1, 1), (1, 2), (2, 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-depth", type=int, default=Config.max_depth)
    cfg = Config(ap.parse_args().max_depth)
    for m, l in cfg.patterns:
        print(f"pattern m={m} l={l}, limit alpha {float(alpha_of(m, l)):.4f}")
        for c in range(1, cfg.max_depth + 1):
            h, w = complete_tree_dims(3, c, m, l)
            n = (3 ** (c + 1) - 1) // 2
            alpha = math.log(max(h, w)) / math.log(n)
            print(f"  c={c:2d} n={n:7d} {h:5d} x {w:<5d} area/n={h * w / n:6.3f} alpha={alpha:.4f}")


if __name__ == "__main__":
    main()

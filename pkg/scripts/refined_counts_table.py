"""Print a_(n,k) and b_(n,k) next to exhaustive horizontal-step histograms.

    python scripts/refined_counts_table.py --max-n 7
"""
import argparse
from collections import Counter
from dataclasses import dataclass

from wellpath.counting import (
    count_motzkin_refined,
    count_positive_refined,
    enumerate_motzkin,
    enumerate_positive,
)
from wellpath.paths import horizontal_step_count


@dataclass
class Config:
    max_n: int = 7


def table(name, counter_fn, generator, n_range):
    print(f"{name}: n  k  formula  exhaustive")
    for n in n_range:
        hist = Counter(horizontal_step_count(p) for p in generator(n))
        for k in range(n + 1):
            want, got = counter_fn(n, k), hist.get(k, 0)
            if want or got:
                flag = "" if want == got else "  <-- mismatch"
                print(f"  {n:2d} {k:2d} {want:8d} {got:10d}{flag}")


def main(cfg: Config):
    table("Motzkin", count_motzkin_refined, enumerate_motzkin, range(2, cfg.max_n + 1))
    table("positive", count_positive_refined, enumerate_positive, range(1, cfg.max_n + 1))


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(ap.parse_args().max_n))

"""Sample positive paths through random matchings and compare with uniform.

    python scripts/sampler_histogram.py --n 3 --samples 150000
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from scipy.stats import chisquare

from wellpath.bijections import phi_prime_inv, psi_prime_inv
from wellpath.counting import enumerate_positive
from wellpath.matchings import random_matching


@dataclass
class Config:
    n: int = 3
    samples: int = 150_000
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    counts = Counter(phi_prime_inv(psi_prime_inv(random_matching(cfg.n, rng)))
                     for _ in range(cfg.samples))
    paths = list(enumerate_positive(cfg.n))
    expected = cfg.samples / len(paths)
    for p in paths:
        print(f"{str(p):24s} {counts[p]:8d}  ratio {counts[p] / expected:.3f}")
    print(f"chi-square p = {chisquare([counts[p] for p in paths]).pvalue:.4f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    main(Config(a.n, a.samples, a.seed))

"""Monte Carlo: how many traces does the aggregate-then-decode pipeline need?

For random x of length n, draw M traces with t deletions each, aggregate
them, and record the smallest deck order that decodes the aggregate
(remaining deletions + 1).  Prints the mean required k for each M.

    python scripts/channel_experiment.py --n 64 --t 8 --M 1,2,4,8 --trials 200
"""
import argparse
from dataclasses import dataclass, field
from typing import List

import numpy as np

from hybriddeck.channel import ChannelSpec, sample_traces
from hybriddeck.cli import int_range
from hybriddeck.deck import compute_deck
from hybriddeck.multitrace import aggregate, reconstruct_multi
from hybriddeck.seqcore import BinarySequence


@dataclass
class ExperimentConfig:
    n: int = 64
    t: int = 8
    Ms: List[int] = field(default_factory=lambda: [1, 2, 4, 8])
    trials: int = 200
    seed: int = 0
    check_decode: bool = True


def run(cfg: ExperimentConfig):
    rng = np.random.default_rng(cfg.seed)
    results = {M: [] for M in cfg.Ms}
    for trial in range(cfg.trials):
        bits = rng.integers(0, 2, cfg.n).tolist()
        x = BinarySequence.from_bits(bits)
        if x.zeros < cfg.t:
            continue
        for M in cfg.Ms:
            ts = sample_traces(x, ChannelSpec(cfg.t, M, seed=cfg.seed * 100003 + trial))
            remaining = cfg.n - aggregate(ts).length
            k = remaining + 1
            if cfg.check_decode:
                assert reconstruct_multi(ts, compute_deck(x, k), cfg.n) == x
            results[M].append(k)
    return results


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--t", type=int, default=8)
    p.add_argument("--M", type=int_range, default=[1, 2, 4, 8])
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-decode", action="store_true")
    a = p.parse_args(argv)
    cfg = ExperimentConfig(a.n, a.t, a.M, a.trials, a.seed, not a.no_decode)
    res = run(cfg)
    print(f"n={cfg.n} t={cfg.t} trials={cfg.trials}")
    print(f"{'M':>4} {'mean k':>8} {'max k':>6}")
    for M, ks in res.items():
        print(f"{M:>4} {np.mean(ks):8.2f} {max(ks):>6}")


if __name__ == "__main__":
    main()

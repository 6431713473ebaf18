"""Scan max_z |D_t(z)| against C(ceil(n/2), t) and report the extremal words.

    python scripts/max_ball_scan.py --n-max 18 --t-max 3 --all-t
"""
import argparse
import json
from dataclasses import dataclass

from hybriddeck.balls import max_ball_bound_check
from hybriddeck.parallel import default_workers


@dataclass
class ScanConfig:
    n_min: int = 2
    n_max: int = 18
    t_max: int = 3
    all_t: bool = False  # also scan t >= floor(n/6), outside the claimed range
    workers: int = 1


def scan(cfg: ScanConfig):
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for t in range(cfg.t_max + 1):
            in_range = t < n // 6
            if not in_range and not cfg.all_t:
                continue
            r = max_ball_bound_check(n, t, workers=cfg.workers, check_range=False)
            rows.append(dict(n=n, t=t, max=r.max, bound=r.bound, alternating=r.alternating_size,
                             holds=r.holds, claimed=in_range, argmax=r.argmax[:4],
                             n_argmax=len(r.argmax)))
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=18)
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--all-t", action="store_true")
    p.add_argument("--workers", type=int, default=default_workers())
    p.add_argument("--json", action="store_true")
    a = p.parse_args(argv)
    rows = scan(ScanConfig(a.n_min, a.n_max, a.t_max, a.all_t, a.workers))
    if a.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'n':>3} {'t':>2} {'max':>6} {'bound':>6} {'alt':>6}  holds  claimed  argmax")
    for r in rows:
        print(f"{r['n']:>3} {r['t']:>2} {r['max']:>6} {r['bound']:>6} {r['alternating']:>6}  "
              f"{str(r['holds']):5}  {str(r['claimed']):7}  {' '.join(r['argmax'])}"
              + (" ..." if r["n_argmax"] > 4 else ""))


if __name__ == "__main__":
    main()

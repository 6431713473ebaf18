"""Exhaustive table of f(n, t, M), written as CSV.

    python scripts/ftable.py --n 2-12 --t 1-4 --M 1,2,3 --out ftable.csv
"""
import argparse
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import List

from hybriddeck.cli import int_range
from hybriddeck.parallel import default_workers
from hybriddeck.search import certificates_to_csv, f_ntM


@dataclass
class TableConfig:
    ns: List[int] = field(default_factory=lambda: list(range(2, 13)))
    ts: List[int] = field(default_factory=lambda: [1, 2, 3, 4])
    Ms: List[int] = field(default_factory=lambda: [1])
    workers: int = 1
    max_n: int = None
    out: str = None


def run(cfg: TableConfig):
    certs = []
    for n in cfg.ns:
        for t in cfg.ts:
            if t > n:
                continue
            for M in cfg.Ms:
                t0 = time.perf_counter()
                cert = f_ntM(n, t, M, workers=cfg.workers, max_n=cfg.max_n)
                assert cert.verify(), cert
                logging.info("f(%d,%d,%d) = %d  [%.2fs]", n, t, M, cert.k, time.perf_counter() - t0)
                certs.append(cert)
    return certs


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int_range, default=TableConfig().ns)
    p.add_argument("--t", type=int_range, default=TableConfig().ts)
    p.add_argument("--M", type=int_range, default=[1])
    p.add_argument("--workers", type=int, default=default_workers())
    p.add_argument("--max-n", type=int)
    p.add_argument("--out")
    a = p.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    cfg = TableConfig(a.n, a.t, a.M, a.workers, a.max_n, a.out)
    text = certificates_to_csv(run(cfg))
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()

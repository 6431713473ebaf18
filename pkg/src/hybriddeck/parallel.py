"""Deterministic fan-out over static partitions of {0,1}^n."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def default_workers() -> int:
    return os.cpu_count() or 1


def prefix_ranges(n: int, max_chunks: int = 64):
    """Split 0..2^n-1 into equal contiguous ranges (one per high-order prefix)."""
    bits = min(n, max(0, (max_chunks - 1).bit_length()))
    step = 1 << (n - bits)
    return [(i * step, (i + 1) * step) for i in range(1 << bits)]


def map_chunks(fn, tasks, workers: int = 1):
    """Ordered map; results come back in task order regardless of worker count."""
    tasks = list(tasks)
    if workers is None or workers <= 0:
        workers = default_workers()
    if workers == 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(fn, tasks))

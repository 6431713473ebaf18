"""Seeded simulator for the zero-deleting ("good nanopore") channel.

Each trace deletes a uniformly random size-t subset of the zero positions.
That is uniform over position subsets, not over distinct outcomes: a long
zero run loses symbols more often than a short one.  Trace m draws from its
own stream seeded by (seed, m), so any trace can be regenerated alone.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .balls import deletion_ball_size
from .multitrace import TraceSet
from .seqcore import BinarySequence, SequenceLike, as_sequence

MAX_DISTINCT_ATTEMPTS = 1_000_000


@dataclass(frozen=True)
class ChannelSpec:
    t: int
    M: int = 1
    seed: int = 0
    distinct: bool = False


def trace_stream(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed & (2**64 - 1), index])


def sample_trace(x: SequenceLike, t: int, rng: np.random.Generator) -> BinarySequence:
    x = as_sequence(x)
    if not 0 <= t <= x.zeros:
        raise ValueError(f"cannot delete {t} zeros from a word with {x.zeros}")
    text = x.text
    zero_pos = [i for i, c in enumerate(text) if c == "0"]
    drop = set(rng.choice(zero_pos, size=t, replace=False).tolist()) if t else set()
    return BinarySequence.parse("".join(c for i, c in enumerate(text) if i not in drop))


def sample_traces(x: SequenceLike, spec: ChannelSpec, workers: int = 1) -> TraceSet:
    """M traces of x, fully determined by (x, spec)."""
    x = as_sequence(x)
    if spec.M < 1:
        raise ValueError("M must be >= 1")
    if not 0 <= spec.t <= x.zeros:
        raise ValueError(f"cannot delete {spec.t} zeros from a word with {x.zeros}")

    def draw(index):
        return sample_trace(x, spec.t, trace_stream(spec.seed, index))

    if not spec.distinct:
        if workers and workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                traces = list(pool.map(draw, range(spec.M)))
        else:
            traces = [draw(m) for m in range(spec.M)]
        return TraceSet(tuple(traces), x.length)

    size = deletion_ball_size(x, spec.t)
    if spec.M > size:
        raise ValueError(f"only {size} distinct traces exist, asked for {spec.M}")
    seen, traces = set(), []
    for attempt in range(MAX_DISTINCT_ATTEMPTS):
        u = draw(attempt)
        if u not in seen:
            seen.add(u)
            traces.append(u)
            if len(traces) == spec.M:
                return TraceSet(tuple(traces), x.length)
    raise RuntimeError(f"gave up after {MAX_DISTINCT_ATTEMPTS} draws")

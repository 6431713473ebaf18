"""Asymmetric deletion and insertion balls.

``D_t(v)`` holds every sequence reachable from ``v`` by deleting exactly t
zeros, ``I_t(v)`` every sequence reachable by inserting t zeros.  On
profiles a deletion ball is the set of vectors ``X - d`` with
``0 <= d_i <= X_i`` and ``sum d = t``, so its size is a count of bounded
compositions.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import comb
from typing import List, Sequence, Set

from .parallel import map_chunks, prefix_ranges
from .seqcore import (BinarySequence, SequenceLike, alternating, as_sequence,
                      from_profile)


def bounded_compositions(caps: Sequence[int], total: int):
    """Yield every d with 0 <= d_i <= caps[i] and sum(d) = total."""
    caps = list(caps)
    if not caps:
        if total == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    room = sum(rest)
    for d0 in range(max(0, total - room), min(head, total) + 1):
        for tail in bounded_compositions(rest, total - d0):
            yield (d0,) + tail


def bounded_composition_count(caps: Sequence[int], total: int) -> int:
    """Number of d with 0 <= d_i <= caps[i], sum(d) = total (DP over parts)."""
    if total < 0:
        return 0
    ways = [1] + [0] * total
    for c in caps:
        if c == 0:
            continue
        prefix = [0]
        for w in ways:
            prefix.append(prefix[-1] + w)
        ways = [prefix[s + 1] - prefix[max(0, s - c)] for s in range(total + 1)]
    return ways[total]


def deletion_ball(v: SequenceLike, t: int) -> Set[BinarySequence]:
    v = as_sequence(v)
    if not 0 <= t <= v.zeros:
        raise ValueError(f"cannot delete {t} zeros from a word with {v.zeros}")
    X = v.profile
    return {from_profile(x - d for x, d in zip(X, ds)) for ds in bounded_compositions(X, t)}


def deletion_ball_size(v: SequenceLike, t: int) -> int:
    v = as_sequence(v)
    if t < 0 or t > v.zeros:
        return 0
    return bounded_composition_count(v.profile, t)


def insertion_ball(v: SequenceLike, t: int) -> Set[BinarySequence]:
    v = as_sequence(v)
    if t < 0:
        raise ValueError("t must be nonnegative")
    X = v.profile
    return {from_profile(x + d for x, d in zip(X, ds))
            for ds in bounded_compositions([t] * len(X), t)}


def insertion_ball_size(v: SequenceLike, t: int) -> int:
    N = as_sequence(v).weight + 1
    return comb(N + t - 1, t)


def _same_length_profiles(x, y):
    x, y = as_sequence(x), as_sequence(y)
    if x.length != y.length:
        raise ValueError(f"lengths differ: {x.length} vs {y.length}")
    return x, y


def common_trace_exists(x: SequenceLike, y: SequenceLike, t: int) -> bool:
    """Whether D_t(x) and D_t(y) intersect, by the min-profile test.

    For t > zeros the test is vacuous and answers True (while the balls are
    empty); this keeps it the exact dual of common_supersequence_exists.
    """
    x, y = _same_length_profiles(x, y)
    if x.weight != y.weight:
        return False
    return sum(map(min, x.profile, y.profile)) >= x.zeros - t


def common_supersequence_exists(x: SequenceLike, y: SequenceLike, t: int) -> bool:
    """Whether I_t(x) and I_t(y) intersect."""
    x, y = _same_length_profiles(x, y)
    if x.weight != y.weight:
        return False
    return sum(map(max, x.profile, y.profile)) <= x.zeros + t


def common_trace_count(x: SequenceLike, y: SequenceLike, t: int) -> int:
    """|D_t(x) & D_t(y)|, counted on the componentwise-min profile."""
    x, y = _same_length_profiles(x, y)
    if x.weight != y.weight or t > x.zeros:
        return 0
    caps = tuple(map(min, x.profile, y.profile))
    # a common trace keeps zeros - t zeros, at most caps[i] in run i
    return bounded_composition_count(caps, x.zeros - t)


def is_asymmetric_subsequence(u: SequenceLike, w: SequenceLike) -> bool:
    """Whether u arises from w by deleting zeros only."""
    u, w = as_sequence(u), as_sequence(w)
    if u.weight != w.weight or u.length > w.length:
        return False
    return all(a <= b for a, b in zip(u.profile, w.profile))


@dataclass
class MaxBallReport:
    n: int
    t: int
    max: int
    bound: int
    argmax: List[str] = field(default_factory=list)
    alternating_size: int = 0

    @property
    def holds(self) -> bool:
        return self.max <= self.bound

    def to_dict(self) -> dict:
        d = asdict(self)
        d["max"], d["bound"] = str(self.max), str(self.bound)
        d["alternating_size"] = str(self.alternating_size)
        return d

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _max_ball_chunk(args):
    n, t, lo, hi = args
    best, arg = -1, []
    for v in range(lo, hi):
        text = format(v, f"0{n}b")
        size = bounded_composition_count([len(r) for r in text.split("1")], t)
        if size > best:
            best, arg = size, [text]
        elif size == best:
            arg.append(text)
    return best, arg


def max_ball_bound_check(n: int, t: int, workers: int = 1,
                         check_range: bool = True) -> MaxBallReport:
    """Exhaustive max of |D_t(z)| over z in {0,1}^n against C(ceil(n/2), t)."""
    if n < 2 or t < 0:
        raise ValueError("need n >= 2 and t >= 0")
    if check_range and not t < n // 6:
        raise ValueError(f"the ball bound is only claimed for t < floor(n/6) = {n // 6}")
    best, arg = -1, []
    for size, texts in map_chunks(_max_ball_chunk,
                                  [(n, t, lo, hi) for lo, hi in prefix_ranges(n)],
                                  workers):
        if size > best:
            best, arg = size, list(texts)
        elif size == best:
            arg.extend(texts)
    return MaxBallReport(n, t, best, comb(-(-n // 2), t), sorted(arg),
                         deletion_ball_size(alternating(n), t))

"""Exhaustive computation of f(n, t) and f(n, t, M), plus lower-bound witnesses.

f(n, t, M) is the least deck order k such that no two distinct sequences of
length n share their k-deck and at least M common traces in D_t.  The search
runs the k-deck of every sequence through a vectorized DP, buckets sequences
on the exact deck fingerprint, and then compares zero-run profiles inside
each bucket: x and y share ``count_bounded(min(X, Y), zeros - t)`` traces.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import os
from dataclasses import asdict, dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .balls import common_trace_count, deletion_ball
from .deck import compute_deck, fingerprint_header, fingerprint_width
from .parallel import map_chunks
from .seqcore import BinarySequence, SequenceLike, alternating, as_sequence

log = logging.getLogger(__name__)

CAP_ENV = "HYBRIDDECK_MAX_N"
DEFAULT_CAP = 16
DEFAULT_CAP_MULTI = 14
CHUNK_BYTES = 1 << 26

CSV_COLUMNS = ["n", "t", "M", "k", "witness_x", "witness_y", "exhaustive"]


class ResourceCapError(RuntimeError):
    """Requested search is larger than the configured cap."""


@dataclass(frozen=True)
class BoundCertificate:
    n: int
    t: int
    M: int
    k: int
    witness: Optional[Tuple[str, str]] = None
    shared: int = 0
    exhaustive: bool = True

    def verify(self) -> bool:
        """Re-check the witness with full decks and explicit deletion balls."""
        if self.witness is None:
            return True
        x, y = map(BinarySequence.parse, self.witness)
        if x == y or len(x) != self.n or len(y) != self.n:
            return False
        if compute_deck(x, self.k - 1) != compute_deck(y, self.k - 1):
            return False
        if self.t > min(x.zeros, y.zeros):
            return False
        common = deletion_ball(x, self.t) & deletion_ball(y, self.t)
        return len(common) >= self.M and len(common) == self.shared

    def to_dict(self) -> dict:
        d = asdict(self)
        d["witness"] = list(self.witness) if self.witness else None
        return d

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d) -> "BoundCertificate":
        w = d.get("witness")
        return cls(int(d["n"]), int(d["t"]), int(d["M"]), int(d["k"]),
                   tuple(w) if w else None, int(d.get("shared", 0)),
                   bool(d.get("exhaustive", True)))

    def csv_row(self) -> dict:
        x, y = self.witness if self.witness else ("", "")
        return {"n": self.n, "t": self.t, "M": self.M, "k": self.k,
                "witness_x": x, "witness_y": y, "exhaustive": str(self.exhaustive).lower()}


def certificates_to_csv(certs: Sequence[BoundCertificate]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for c in sorted(certs, key=lambda c: (c.n, c.t, c.M)):
        writer.writerow(c.csv_row())
    return buf.getvalue()


def resource_cap(M: int = 1, override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_CAP if M == 1 else DEFAULT_CAP_MULTI


def estimate_memory(n: int, k: int) -> int:
    """Rough peak bytes: fingerprint keys for 2^n words plus one DP chunk."""
    keys = (1 << n) * (8 + (1 << k) * fingerprint_width(n, k) + 80)
    return keys + min(CHUNK_BYTES, (1 << n) * (1 << (k + 1)) * 8)


def _check_cap(n: int, M: int, cap: Optional[int]):
    limit = resource_cap(M, cap)
    if n > limit:
        raise ResourceCapError(
            f"n={n} exceeds the search cap {limit}; raise it with --max-n or {CAP_ENV}")


# -- deck fingerprints for every word -------------------------------------

def deck_count_matrix(n: int, k: int, lo: int, hi: int) -> np.ndarray:
    """k-deck counts of every word with value in [lo, hi); one row per word."""
    values = np.arange(lo, hi, dtype=np.int64)
    rows = len(values)
    layers = [np.ones((rows, 1), dtype=np.int64)]
    layers += [np.zeros((rows, 1 << L), dtype=np.int64) for L in range(1, k + 1)]
    for i in range(n):
        b = ((values >> (n - 1 - i)) & 1)[:, None]
        remaining = n - i - 1
        for L in range(min(i + 1, k), 0, -1):
            if L + remaining < k:
                break
            src = layers[L - 1]
            layers[L][:, 0::2] += src * (1 - b)
            layers[L][:, 1::2] += src * b
    return layers[k]


def _fingerprint_chunk(args):
    n, k, lo, hi = args
    counts = deck_count_matrix(n, k, lo, hi)
    w = fingerprint_width(n, k)
    be = counts.astype(">u8").view(np.uint8).reshape(len(counts), -1, 8)[:, :, 8 - w:]
    head = fingerprint_header(n, k)
    return [head + row.tobytes() for row in be]


def _chunk_ranges(n: int, k: int):
    per_row = (1 << (k + 1)) * 8
    rows = max(1, min(1 << n, CHUNK_BYTES // per_row))
    rows = 1 << (rows.bit_length() - 1)
    return [(n, k, lo, min(lo + rows, 1 << n)) for lo in range(0, 1 << n, rows)]


def fingerprint_buckets(n: int, k: int, workers: int = 1) -> List[List[int]]:
    """Words of length n grouped by (weight, k-deck); each group ascending."""
    buckets: Dict[Tuple[int, bytes], List[int]] = {}
    tasks = _chunk_ranges(n, k)
    v = 0
    for keys in map_chunks(_fingerprint_chunk, tasks, workers):
        for key in keys:
            buckets.setdefault((bin(v).count("1"), key), []).append(v)
            v += 1
    return sorted((b for b in buckets.values() if len(b) > 1), key=lambda b: b[0])


# -- pair scan inside buckets ----------------------------------------------

def count_bounded_rows(caps: np.ndarray, total: int) -> np.ndarray:
    """Row-wise number of d with 0 <= d <= caps[row], sum(d) = total."""
    rows = caps.shape[0]
    ways = np.zeros((rows, total + 1), dtype=np.int64)
    ways[:, 0] = 1
    s = np.arange(total + 1)
    for col in caps.T:
        prefix = np.concatenate([np.zeros((rows, 1), dtype=np.int64), np.cumsum(ways, axis=1)], axis=1)
        lo = np.maximum(0, s[None, :] - col[:, None])
        ways = prefix[:, s + 1] - np.take_along_axis(prefix, lo, axis=1)
    return ways[:, total]


def _profiles(members: Sequence[int], n: int) -> np.ndarray:
    return np.array([[len(r) for r in format(v, f"0{n}b").split("1")] for v in members],
                    dtype=np.int64)


def _scan_bucket(members: Sequence[int], n: int, t: int, M: int, mode: str):
    zeros = n - bin(members[0]).count("1")
    kept = zeros - t
    if kept < 0:
        return []
    P = _profiles(members, n)
    found = []
    for i in range(len(members) - 1):
        caps = np.minimum(P[i], P[i + 1:])
        idx = np.nonzero(caps.sum(axis=1) >= kept)[0]
        if len(idx) == 0:
            continue
        shared = count_bounded_rows(caps[idx], kept)
        good = shared >= M
        if not good.any():
            continue
        for j, c in zip(idx[good], shared[good]):
            found.append((members[i], members[i + 1 + int(j)], int(c)))
            if mode != "all":
                return found
    return found


def _scan_batch(args):
    batch, n, t, M, mode = args
    out = []
    for members in batch:
        hits = _scan_bucket(members, n, t, M, mode)
        if hits and mode == "any":
            return hits
        out.extend(hits)
    if mode == "lexmin" and out:
        return [min(out)]
    return out


def _scan(n: int, t: int, k: int, M: int, mode: str, workers: int = 1):
    buckets = fingerprint_buckets(n, k, workers)
    nbatch = max(1, min(len(buckets), 4 * max(1, workers or os.cpu_count() or 1)))
    batches = [buckets[i::nbatch] for i in range(nbatch)]
    results = map_chunks(_scan_batch, [(b, n, t, M, mode) for b in batches], workers)
    hits = sorted(h for r in results for h in r)
    if mode == "lexmin":
        return hits[:1]
    return hits


def confusable_pairs(n: int, t: int, k: int, M: int = 1, workers: int = 1,
                     max_n: Optional[int] = None) -> List[Tuple[BinarySequence, BinarySequence, int]]:
    """All pairs x < y with equal k-deck sharing at least M traces in D_t."""
    if not 0 <= t <= n or not 0 <= k <= n or M < 1:
        raise ValueError("need 0 <= t <= n, 0 <= k <= n and M >= 1")
    _check_cap(n, M, max_n)
    return [(BinarySequence(n, x), BinarySequence(n, y), c)
            for x, y, c in _scan(n, t, k, M, "all", workers)]


def f_ntM(n: int, t: int, M: int = 1, workers: int = 1,
          max_n: Optional[int] = None) -> BoundCertificate:
    """Exact f(n, t, M) by exhaustive search, witness at deck order k - 1."""
    if n < 1 or not 0 <= t <= n or M < 1:
        raise ValueError("need n >= 1, 0 <= t <= n and M >= 1")
    _check_cap(n, M, max_n)
    for k in range(n + 1):
        log.info("f(%d,%d,%d): scanning k=%d, about %.1f MB", n, t, M, k, estimate_memory(n, k) / 2**20)
        if not _scan(n, t, k, M, "any", workers):
            break
    witness, shared = None, 0
    if k > 0:
        (x, y, shared), = _scan(n, t, k - 1, M, "lexmin", workers)
        witness = (format(x, f"0{n}b"), format(y, f"0{n}b"))
    return BoundCertificate(n, t, M, k, witness, shared, True)


def f_nt(n: int, t: int, workers: int = 1, max_n: Optional[int] = None) -> BoundCertificate:
    """Exact f(n, t) by exhaustive search."""
    return f_ntM(n, t, 1, workers, max_n)


def ftable(ns, ts, Ms=(1,), workers: int = 1, max_n: Optional[int] = None):
    """Certificates for every feasible (n, t, M) combination, in sorted order."""
    out = []
    for n in sorted(set(ns)):
        for t in sorted(set(ts)):
            if not 1 <= t < n:
                continue
            for M in sorted(set(Ms)):
                out.append(f_ntM(n, t, M, workers, max_n))
    return out


# -- constructive witnesses ----------------------------------------------

def _deck_agreement(x: BinarySequence, y: BinarySequence) -> int:
    """Largest k such that x and y have equal k-decks."""
    k = 0
    while k < len(x) and compute_deck(x, k + 1) == compute_deck(y, k + 1):
        k += 1
    return k


def doubling_witness(x: SequenceLike, y: SequenceLike, shared: SequenceLike):
    """(xy, yx, shared+shared): equal k-decks become equal (k+1)-decks."""
    x, y, shared = as_sequence(x), as_sequence(y), as_sequence(shared)
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    if x == y:
        raise ValueError("x == y gives xy == yx, which is not a witness")
    t = len(x) - len(shared)
    if t < 0 or shared not in deletion_ball(x, t) or shared not in deletion_ball(y, t):
        raise ValueError(f"{shared} is not a common trace of {x} and {y}")
    return x + y, y + x, shared + shared


def morse_thue_witness(s: int):
    """Pair of length 2^s with equal s-decks and a common trace of length 2^(s-1)."""
    if s < 1:
        raise ValueError("level must be >= 1")
    x, y, z = map(BinarySequence.parse, ("01", "10", "1"))
    for _ in range(s - 1):
        x, y, z = doubling_witness(x, y, z)
    return x, y, z


def multitrace_witness(x_head: SequenceLike, y_head: SequenceLike, z: SequenceLike,
                       M: int, parity: str = "even"):
    """Append an alternating tail so x, y share M (even) or M+1 (odd) traces.

    The tail is (01)^M for even parity and 0(10)^M for odd; the traces are z
    followed by each one-zero deletion of the tail.
    """
    x_head, y_head, z = as_sequence(x_head), as_sequence(y_head), as_sequence(z)
    if M < 1 or parity not in ("even", "odd"):
        raise ValueError("need M >= 1 and parity 'even' or 'odd'")
    if x_head == y_head or len(x_head) != len(y_head):
        raise ValueError("heads must be distinct and of equal length")
    T = len(x_head) - len(z)
    if T < 0 or z not in deletion_ball(x_head, T) or z not in deletion_ball(y_head, T):
        raise ValueError(f"{z} is not a common trace of the heads")
    tail = alternating(2 * M if parity == "even" else 2 * M + 1)
    text = tail.text
    traces = [z + BinarySequence.parse(text[:i] + text[i + 1:])
              for i, c in enumerate(text) if c == "0"]
    return x_head + tail, y_head + tail, traces


@dataclass(frozen=True)
class MBounds:
    lower: int
    upper: int


def _floor_log(M: int, base_num: int, base_den: int = 1) -> int:
    """Largest q >= 0 with (base_num/base_den)^q <= M."""
    q = 0
    while base_num ** (q + 1) <= M * base_den ** (q + 1):
        q += 1
    return q


def _ceil_log(M: int, base_num: int, base_den: int = 1) -> int:
    """Smallest q >= 0 with (base_num/base_den)^q >= M."""
    q = 0
    while base_num ** q < M * base_den ** q:
        q += 1
    return q


def m_bounds(n: int, t: int, M: int) -> MBounds:
    """The bracket [m0, m1] on the effective trace length m in f(n,t,M) = f(n, n-m).

    m0 = floor(log M / log n + (n-t)) and
    m1 = ceil(log M / log((n-t+1)/2) + (n-t)), both evaluated exactly: the
    logarithm ratios reduce to integer power comparisons.
    """
    if n < 2 or not 1 <= t < n or M < 1:
        raise ValueError("need n >= 2, 1 <= t < n and M >= 1")
    m = n - t
    if M == 1:
        return MBounds(m, m)
    lower = m + _floor_log(M, n)
    if m + 1 <= 2:
        raise ValueError(f"log((n-t+1)/2) = 0 for n-t = {m}; the upper bound is undefined")
    upper = m + _ceil_log(M, m + 1, 2)
    return MBounds(lower, upper)


def witness_certificate(x: SequenceLike, y: SequenceLike, t: int, M: int = 1) -> BoundCertificate:
    """Non-exhaustive certificate f(n, t, M) >= k from one explicit pair."""
    x, y = as_sequence(x), as_sequence(y)
    k = _deck_agreement(x, y) + 1
    shared = common_trace_count(x, y, t)
    if x == y or shared < M:
        raise ValueError("pair does not witness anything")
    return BoundCertificate(len(x), t, M, k, (x.text, y.text), shared, False)


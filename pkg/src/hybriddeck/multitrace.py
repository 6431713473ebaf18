"""Aggregating several asymmetric traces into one.

Every trace of x has a profile bounded componentwise by x's profile, so the
componentwise max of the trace profiles is the shortest common asymmetric
supersequence of the traces, and it is itself a trace of x.  Feeding that
aggregate to the single-trace decoder leaves fewer zeros to recover.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Tuple, Union

from .deck import Deck
from .reconstruct import reconstruct_single_trace
from .seqcore import BinarySequence, SequenceLike, as_sequence, from_profile


class IncompatibleTracesError(ValueError):
    """Traces that cannot come from one sequence through zero deletions."""


@dataclass(frozen=True)
class TraceSet:
    traces: Tuple[BinarySequence, ...]
    n: Optional[int] = None

    def __post_init__(self):
        traces = tuple(as_sequence(u) for u in self.traces)
        object.__setattr__(self, "traces", traces)
        if not traces:
            raise ValueError("a trace set needs at least one trace")
        if len({u.length for u in traces}) != 1:
            raise IncompatibleTracesError("traces have different lengths")
        if len({u.weight for u in traces}) != 1:
            raise IncompatibleTracesError("traces have different weights")
        if self.n is not None and self.n < traces[0].length:
            raise ValueError(f"target length {self.n} is shorter than the traces")

    def __len__(self):
        return len(self.traces)

    def __iter__(self):
        return iter(self.traces)

    @property
    def trace_length(self) -> int:
        return self.traces[0].length

    def to_text(self) -> str:
        return "".join(f"{u}\n" for u in self.traces)


def _as_traceset(ts) -> TraceSet:
    return ts if isinstance(ts, TraceSet) else TraceSet(tuple(ts))


def parse_traces(text: str, n: Optional[int] = None) -> TraceSet:
    """One '0'/'1' string per line; blank lines are skipped."""
    return TraceSet(tuple(BinarySequence.parse(line) for line in text.splitlines() if line.strip()), n)


def read_traces(path: Union[str, Path], n: Optional[int] = None) -> TraceSet:
    return parse_traces(Path(path).read_text(), n)


def aggregate(ts: Union[TraceSet, Iterable[SequenceLike]]) -> BinarySequence:
    """Shortest common asymmetric supersequence: componentwise max of profiles.

    Inputs need equal weight but not equal length.
    """
    seqs = [as_sequence(u) for u in ts]
    if not seqs:
        raise ValueError("nothing to aggregate")
    if len({u.weight for u in seqs}) != 1:
        raise IncompatibleTracesError("traces have different weights")
    return from_profile(max(col) for col in zip(*(u.profile for u in seqs)))


def profile_hamming(a: SequenceLike, b: SequenceLike) -> int:
    a, b = as_sequence(a), as_sequence(b)
    if a.weight != b.weight:
        raise IncompatibleTracesError(f"weights differ: {a.weight} vs {b.weight}")
    return sum(p != q for p, q in zip(a.profile, b.profile))


def minimal_common_supersequence_level(ts: Union[TraceSet, Iterable[SequenceLike]]) -> int:
    """Fewest zeros that must be inserted into each trace to reach a common word."""
    ts = _as_traceset(ts)
    return aggregate(ts).length - ts.trace_length


def reconstruct_multi(ts: Union[TraceSet, Iterable[SequenceLike]], d: Deck, n: int,
                      verify: bool = True) -> BinarySequence:
    """Aggregate the traces, then run the single-trace decoder on the aggregate."""
    ts = _as_traceset(ts)
    z = aggregate(ts)
    if z.length > n:
        raise IncompatibleTracesError(f"aggregate has length {z.length} > n = {n}")
    remaining = n - z.length
    if d.k < remaining + 1:
        raise ValueError(f"{remaining} deletions remain after aggregation; need k >= {remaining + 1}")
    return reconstruct_single_trace(z, d, n, verify=verify)

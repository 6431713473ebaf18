import random

import pytest
from hypothesis import given, strategies as st

from hybriddeck.deck import compute_deck
from hybriddeck.multitrace import (IncompatibleTracesError, TraceSet, aggregate,
                                   minimal_common_supersequence_level, parse_traces,
                                   profile_hamming, read_traces, reconstruct_multi)
from hybriddeck.seqcore import BinarySequence, from_profile

from oracles import deletions, insertions, is_zero_subsequence

S = BinarySequence.parse


def test_aggregate_examples():
    assert aggregate(["111010", "101101"]) == S("1011010")
    assert aggregate(["110", "011"]) == S("0110")
    assert aggregate(["0110"]) == S("0110")


def test_two_trace_pipeline():
    x = S("10110010")
    d = compute_deck(x, 2)
    z = aggregate(["111010", "101101"])
    assert z.text == "1011010"
    assert reconstruct_multi(["111010", "101101"], d, 8) == x


def test_traceset_validation():
    with pytest.raises(IncompatibleTracesError):
        TraceSet(("011", "0110"))
    with pytest.raises(IncompatibleTracesError):
        TraceSet(("011", "001"))
    with pytest.raises(ValueError):
        TraceSet(())
    with pytest.raises(ValueError):
        TraceSet(("0110",), n=3)


def test_parse_and_read(tmp_path):
    ts = parse_traces("111010\n\n101101\n")
    assert len(ts) == 2 and ts.trace_length == 6
    p = tmp_path / "t.txt"
    p.write_text(ts.to_text())
    assert read_traces(p) == ts


def test_profile_hamming():
    assert profile_hamming("111010", "101101") == 2
    assert profile_hamming("0110", "0110") == 0
    with pytest.raises(IncompatibleTracesError):
        profile_hamming("01", "11")


def test_level():
    assert minimal_common_supersequence_level(["111010", "101101"]) == 1
    assert minimal_common_supersequence_level(["111"]) == 0


profiles = st.integers(0, 4).flatmap(
    lambda w: st.lists(st.lists(st.integers(0, 3), min_size=w + 1, max_size=w + 1),
                       min_size=1, max_size=4))


@given(profiles)
def test_aggregate_algebra(ps):
    seqs = [from_profile(p) for p in ps]
    z = aggregate(seqs)
    # dominance: every input is an asymmetric subsequence of the aggregate
    assert all(is_zero_subsequence(u.text, z.text) for u in seqs)
    assert aggregate(seqs + [z]) == z
    assert aggregate(list(reversed(seqs))) == z
    assert aggregate([aggregate(seqs[:1]), aggregate(seqs[1:] or seqs[:1])]) == z
    assert aggregate(seqs + seqs) == z


def test_aggregate_is_minimal_small():
    for u in ["0101", "1001", "0011"]:
        for v in ["1100", "0110", "1010"]:
            z = aggregate([u, v]).text
            extra = len(z) - 4
            assert not (insertions(u, extra - 1) & insertions(v, extra - 1)) if extra else True
            for w in insertions(u, extra + 1) & insertions(v, extra + 1):
                assert is_zero_subsequence(z, w)


def test_aggregate_never_overshoots():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(4, 14)
        x = "".join(rng.choice("01") for _ in range(n))
        z0 = x.count("0")
        if not z0:
            continue
        t = rng.randint(1, min(4, z0))
        pool = sorted(deletions(x, t))
        traces = rng.sample(pool, min(len(pool), rng.randint(1, 4)))
        z = aggregate(traces)
        assert is_zero_subsequence(z.text, x)


def test_reconstruct_multi_random():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(4, 14)
        x = "".join(rng.choice("01") for _ in range(n))
        z0 = x.count("0")
        if not z0:
            continue
        t = rng.randint(1, min(4, z0))
        pool = sorted(deletions(x, t))
        traces = rng.sample(pool, min(len(pool), rng.randint(1, 4)))
        remaining = n - aggregate(traces).length
        d = compute_deck(x, min(n, t + 1))
        assert reconstruct_multi(traces, d, n).text == x
        if remaining + 1 <= n:
            assert reconstruct_multi(traces, compute_deck(x, remaining + 1), n).text == x


def test_reconstruct_multi_needs_enough_deck():
    with pytest.raises(ValueError):
        reconstruct_multi(["1010"], compute_deck("100100", 1), 6)

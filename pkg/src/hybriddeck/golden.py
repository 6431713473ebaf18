"""Worked examples and published witnesses, each as a named yes/no check."""
from __future__ import annotations

from typing import Callable, List, Tuple

from .balls import (common_supersequence_exists, common_trace_exists,
                    deletion_ball, insertion_ball, max_ball_bound_check)
from .deck import compute_deck, pattern_count, subsequence_count
from .multitrace import aggregate, reconstruct_multi
from .reconstruct import (deck_trace_moments, reconstruct_single_trace,
                          vt_checksum, vt_decode_zero_deletion)
from .search import f_nt, f_ntM, morse_thue_witness, multitrace_witness
from .seqcore import BinarySequence, delete_zeros, ones_before, to_profile

S = BinarySequence.parse

WITNESS_T3 = ("01101001", "10010110")
WITNESS_T4 = ("1100111011001", "1011101001110")
TAIL_TRACES = ("1110101", "1101101", "1101011")
TWO_TRACE_X = "10110010"
TWO_TRACE_TRACES = ("111010", "101101")


def _one_trace_reconstruct():
    x = S("1110")
    return reconstruct_single_trace("111", compute_deck(x, 2), 4) == x


def _one_deck_fails():
    # 1110 and 1101 share the 1-deck and the trace 111
    a, b = S("1110"), S("1101")
    return compute_deck(a, 1) == compute_deck(b, 1) and common_trace_exists(a, b, 1)


def _tail_witness():
    x, y, traces = multitrace_witness("0110", "1001", "11", 3)
    if (x.text, y.text) != ("0110010101", "1001010101"):
        return False
    if tuple(u.text for u in traces) != TAIL_TRACES:
        return False
    common = deletion_ball(x, 3) & deletion_ball(y, 3)
    return compute_deck(x, 2) == compute_deck(y, 2) and set(traces) <= common


def _two_trace_pipeline():
    x = S(TWO_TRACE_X)
    z = aggregate(TWO_TRACE_TRACES)
    d = compute_deck(x, 2)
    return (z == S("1011010") and pattern_count(d, 1) == 11
            and subsequence_count(z, "10") == 8
            and deck_trace_moments(d, z, 8) == (3,)
            and reconstruct_multi(TWO_TRACE_TRACES, d, 8) == x)


def _witness_t3():
    x, y = map(S, WITNESS_T3)
    supers = insertion_ball(x, 3) & insertion_ball(y, 3)
    return (compute_deck(x, 3) == compute_deck(y, 3)
            and any(len(w) == 11 for w in supers)
            and common_supersequence_exists(x, y, 3)
            and bool(deletion_ball(x, 3) & deletion_ball(y, 3)))


def _witness_t4():
    x, y = map(S, WITNESS_T4)
    common = deletion_ball(x, 4) & deletion_ball(y, 4)
    return compute_deck(x, 4) == compute_deck(y, 4) and any(len(u) == 9 for u in common)


def _morse_thue():
    for s in (1, 2, 3):
        x, y, z = morse_thue_witness(s)
        if compute_deck(x, s) != compute_deck(y, s) or len(z) != 2 ** (s - 1):
            return False
        if z not in deletion_ball(x, len(x) - len(z)) or z not in deletion_ball(y, len(y) - len(z)):
            return False
    return morse_thue_witness(3)[:2] == tuple(map(S, WITNESS_T3))


GOLDEN: List[Tuple[str, Callable[[], bool]]] = [
    ("profile of 0110 is (1,0,1)", lambda: to_profile("0110") == (1, 0, 1)),
    ("profile of 10110010 is (0,1,0,2,1)", lambda: to_profile(TWO_TRACE_X) == (0, 1, 0, 2, 1)),
    ("ones before positions 2 and 5 of 00010", lambda: (ones_before("00010", 2), ones_before("00010", 5)) == (0, 1)),
    ("deleting zeros {1,3} of 00010 gives 010", lambda: delete_zeros("00010", {1, 3}) == S("010")),
    ("10 appears three times in 1110", lambda: subsequence_count("1110", "10") == 3),
    ("trace 111 plus 2-deck gives 1110", _one_trace_reconstruct),
    ("1110 and 1101 share the 1-deck and a trace", _one_deck_fails),
    ("VT decoding of 111 gives 1110", lambda: vt_decode_zero_deletion("111", vt_checksum("1110"), 4) == S("1110")),
    ("I_1(01) = {001, 010}", lambda: insertion_ball("01", 1) == {S("001"), S("010")}),
    ("alternating-tail witness and its three traces", _tail_witness),
    ("two traces: aggregate, moment 11 - 8 = 3, reconstruction", _two_trace_pipeline),
    ("aggregation example: 01101 and 00111 give 001101", lambda: aggregate(["01101", "00111"]) == S("001101")),
    ("Morse-Thue doubling witnesses for s = 1, 2, 3", _morse_thue),
    ("t=3 witness pair: equal 3-decks, common trace", _witness_t3),
    ("t=4 witness pair: equal 4-decks, common length-9 trace", _witness_t4),
    ("f(n,1) = 2 for 2 <= n <= 10", lambda: all(f_nt(n, 1).k == 2 for n in range(2, 11))),
    ("f(4,2) = 3", lambda: f_nt(4, 2).k == 3),
    ("f(8,3) = 4", lambda: f_nt(8, 3).k == 4),
    ("f(13,4) = 5", lambda: f_nt(13, 4).k == 5),
    ("f(8,2,2) = 2 and f(10,3,3) = 3", lambda: f_ntM(8, 2, 2).k == 2 and f_ntM(10, 3, 3).k == 3),
    ("max ball at n=12, t=1 is 6 = C(6,1)", lambda: max_ball_bound_check(12, 1).max == 6),
]


def run_golden(report=print) -> bool:
    ok = True
    for name, check in GOLDEN:
        try:
            passed = bool(check())
        except Exception as exc:  # a crash is a failed item, not an abort
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok &= passed
        report(f"{'PASS' if passed else 'FAIL'}  {name}")
    return ok

import itertools
import json

import numpy as np
import pytest

from hybriddeck.balls import common_trace_count
from hybriddeck.deck import compute_deck
from hybriddeck.search import (BoundCertificate, ResourceCapError, certificates_to_csv,
                               confusable_pairs, count_bounded_rows, deck_count_matrix,
                               doubling_witness, f_nt, f_ntM, fingerprint_buckets,
                               ftable, m_bounds, morse_thue_witness,
                               multitrace_witness, witness_certificate)
from hybriddeck.balls import bounded_composition_count
from hybriddeck.seqcore import BinarySequence

from oracles import deck as deck_oracle, deletions, f_bruteforce, words

S = BinarySequence.parse


def test_deck_count_matrix_matches_oracle():
    n, k = 7, 3
    mat = deck_count_matrix(n, k, 0, 1 << n)
    for v, row in enumerate(mat):
        d = deck_oracle(format(v, f"0{n}b"), k)
        assert [d.get(format(p, f"0{k}b"), 0) for p in range(1 << k)] == row.tolist()


@pytest.mark.parametrize("n, k", [(10, 2), (10, 3), (12, 3)])
def test_buckets_are_exact_deck_classes(n, k):
    classes = {}
    for x in words(n):
        classes.setdefault(tuple(sorted(compute_deck(x, k).counts.items())), []).append(int(x, 2))
    expected = sorted((sorted(c) for c in classes.values() if len(c) > 1), key=lambda c: c[0])
    assert [sorted(b) for b in fingerprint_buckets(n, k)] == expected


def test_count_bounded_rows():
    rng = np.random.default_rng(1)
    caps = rng.integers(0, 4, size=(50, 5))
    for total in range(0, 12):
        got = count_bounded_rows(caps, total)
        assert got.tolist() == [bounded_composition_count(c.tolist(), total) for c in caps]


def test_confusable_pairs_examples():
    pairs = confusable_pairs(4, 1, 1)
    assert (S("1101"), S("1110"), 1) in pairs
    assert confusable_pairs(4, 1, 2) == []
    hits = confusable_pairs(8, 3, 3)
    assert (S("01101001"), S("10010110"), common_trace_count("01101001", "10010110", 3)) in hits


def test_confusable_pairs_match_bruteforce():
    for n in range(2, 8):
        ws = words(n)
        for t in range(0, 3):
            for k in range(0, 3):
                exp = []
                for a, b in itertools.combinations(ws, 2):
                    if deck_oracle(a, k) != deck_oracle(b, k):
                        continue
                    c = len(deletions(a, t) & deletions(b, t)) if t <= min(a.count("0"), b.count("0")) else 0
                    if c >= 1:
                        exp.append((a, b, c))
                got = [(x.text, y.text, c) for x, y, c in confusable_pairs(n, t, k)]
                assert got == exp


@pytest.mark.parametrize("n, t, M", [(n, t, 1) for n in range(2, 8) for t in range(0, min(n, 3) + 1)]
                         + [(6, 2, 2), (7, 2, 2), (8, 2, 2), (8, 3, 3), (8, 4, 1)])
def test_f_matches_bruteforce(n, t, M):
    cert = f_ntM(n, t, M)
    assert cert.k == f_bruteforce(n, t, M)
    assert cert.verify()


def test_f_known_values():
    assert [f_nt(n, 1).k for n in range(2, 11)] == [2] * 9
    assert f_nt(4, 2).k == 3
    assert f_nt(8, 3).k == 4
    assert f_nt(5, 0).k == 0


def test_tables_are_monotone_in_n():
    # prefixing a one keeps equal decks and common traces, so f(n+1,t) >= f(n,t)
    certs = {(c.n, c.t): c.k for c in ftable(range(2, 11), range(0, 5))}
    for (n, t), k in certs.items():
        if (n + 1, t) in certs:
            assert certs[(n + 1, t)] >= k
        assert k <= t + 1


def test_m_monotone():
    ks = [f_ntM(9, 3, M).k for M in (1, 2, 3, 4)]
    assert ks == sorted(ks, reverse=True)


def test_certificate_round_trip_and_csv():
    cert = f_nt(4, 2)
    assert cert.witness == ("0110", "1001")
    again = BoundCertificate.from_dict(json.loads(cert.to_json()))
    assert again == cert and again.verify()
    csv_text = certificates_to_csv([cert, f_nt(3, 1)])
    assert csv_text.splitlines()[0] == "n,t,M,k,witness_x,witness_y,exhaustive"
    assert csv_text.splitlines()[1].startswith("3,1,1,2,")
    bad = BoundCertificate(4, 2, 1, 3, ("0110", "1010"), 1)
    assert not bad.verify()


def test_resource_cap(monkeypatch):
    with pytest.raises(ResourceCapError):
        f_nt(17, 1)
    with pytest.raises(ResourceCapError):
        f_nt(8, 1, max_n=6)
    monkeypatch.setenv("HYBRIDDECK_MAX_N", "5")
    with pytest.raises(ResourceCapError):
        confusable_pairs(6, 1, 1)


def test_morse_thue_witness():
    for s in range(1, 5):
        x, y, z = morse_thue_witness(s)
        n = 2 ** s
        assert len(x) == n and len(z) == n // 2 and x != y
        assert compute_deck(x, s) == compute_deck(y, s)
        assert z.text in deletions(x.text, n // 2) & deletions(y.text, n // 2)
    x, y, z = morse_thue_witness(3)
    assert (x.text, y.text) == ("01101001", "10010110")


def test_doubling_rejects_bad_input():
    with pytest.raises(ValueError):
        doubling_witness("01", "01", "1")
    with pytest.raises(ValueError):
        doubling_witness("01", "10", "0")


def test_doubling_raises_deck_order():
    x, y, z = doubling_witness("0110", "1001", "11")
    assert compute_deck(x, 3) == compute_deck(y, 3)
    assert compute_deck(x, 4) != compute_deck(y, 4)


@pytest.mark.parametrize("parity", ["even", "odd"])
def test_multitrace_witness(parity):
    for M in (1, 2, 3):
        x, y, traces = multitrace_witness("0110", "1001", "11", M, parity)
        t = len(x) - len(traces[0])
        assert len(set(traces)) == len(traces) == (M if parity == "even" else M + 1)
        common = deletions(x.text, t) & deletions(y.text, t)
        assert all(u.text in common for u in traces)
        assert compute_deck(x, 2) == compute_deck(y, 2)
        cert = witness_certificate(x, y, t, len(traces))
        assert cert.verify() and cert.k >= 3


def test_m_bounds():
    assert (m_bounds(32, 4, 1).lower, m_bounds(32, 4, 1).upper) == (28, 28)
    b = m_bounds(32, 4, 32)
    assert b.lower == 29
    assert b.lower <= b.upper
    with pytest.raises(ValueError):
        m_bounds(4, 3, 2)


def test_m_bounds_match_float_formula():
    import math
    for n in range(4, 40):
        for t in range(1, n - 2):
            for M in (2, 3, 7, 64, 1000):
                b = m_bounds(n, t, M)
                lo = math.log(M) / math.log(n) + n - t
                hi = math.log(M) / math.log((n - t + 1) / 2) + n - t
                if abs(lo - round(lo)) > 1e-9:
                    assert b.lower == math.floor(lo)
                if abs(hi - round(hi)) > 1e-9:
                    assert b.upper == math.ceil(hi)

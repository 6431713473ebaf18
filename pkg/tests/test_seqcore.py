import pytest
from hypothesis import given, strategies as st

from hybriddeck.seqcore import (BinarySequence, all_sequences, alternating,
                                as_sequence, delete_zeros, deleted_one_counts,
                                from_profile, ones_before, to_profile)

bitstrings = st.text(alphabet="01", max_size=40)


@pytest.mark.parametrize("x, profile", [
    ("0110", (1, 0, 1)),
    ("10110010", (0, 1, 0, 2, 1)),
    ("1111", (0, 0, 0, 0, 0)),
    ("", (0,)),
    ("000", (3,)),
])
def test_to_profile(x, profile):
    assert to_profile(x) == profile


@pytest.mark.parametrize("profile, x", [
    ((1, 0, 1), "0110"),
    ((2, 0, 1, 0), "001101"),
    ((0,), ""),
])
def test_from_profile(profile, x):
    assert from_profile(profile) == BinarySequence.parse(x)


def test_from_profile_rejects_negative():
    with pytest.raises(ValueError):
        from_profile((1, -1))


def test_round_trip_exhaustive():
    for n in range(17):
        for x in all_sequences(n):
            X = x.profile
            assert from_profile(X) == x
            assert len(X) == x.weight + 1
            assert sum(X) + len(X) - 1 == n


@given(bitstrings)
def test_round_trip_long(text):
    x = BinarySequence.parse(text)
    assert from_profile(to_profile(x)).text == text


def test_packed_beyond_64_bits():
    text = "01" * 50
    x = BinarySequence.parse(text)
    assert x.length == 100 and x.weight == 50 and str(x) == text
    assert from_profile(x.profile) == x


def test_ordering_is_lexicographic():
    xs = sorted(BinarySequence.parse(t) for t in ["110", "011", "101", "000"])
    assert [x.text for x in xs] == ["000", "011", "101", "110"]


def test_bits_and_concat():
    assert BinarySequence.from_bits([0, 1, 1]).text == "011"
    assert (as_sequence("01") + "10").text == "0110"
    assert as_sequence((1, 0)).bits == (1, 0)
    with pytest.raises(ValueError):
        BinarySequence.parse("012")


def test_ones_before():
    assert ones_before("00010", 2) == 0
    assert ones_before("00010", 5) == 1
    assert ones_before("1111", 1) == 0
    with pytest.raises(IndexError):
        ones_before("0101", 5)
    with pytest.raises(IndexError):
        ones_before("0101", 0)


def test_delete_zeros():
    assert delete_zeros("00010", {1, 3}).text == "010"
    assert delete_zeros("1110", {4}).text == "111"
    assert delete_zeros("0110", set()).text == "0110"
    with pytest.raises(ValueError):
        delete_zeros("1110", {1})


def test_deleted_one_counts():
    assert deleted_one_counts("00010", {1, 3}) == (0, 0)
    assert deleted_one_counts("10110010", {6}) == (3,)


@given(bitstrings, st.data())
def test_delete_zeros_keeps_weight_and_lowers_profile(text, data):
    x = BinarySequence.parse(text)
    zeros = [i for i, c in enumerate(text, 1) if c == "0"]
    picked = data.draw(st.sets(st.sampled_from(zeros)) if zeros else st.just(set()))
    u = delete_zeros(x, picked)
    assert u.weight == x.weight
    assert len(u) == len(x) - len(picked)
    assert all(a <= b for a, b in zip(u.profile, x.profile))
    assert sum(x.profile) - sum(u.profile) == len(picked)


def test_alternating():
    assert alternating(5).text == "01010"
    assert alternating(0).text == ""

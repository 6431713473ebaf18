"""Exact k-decks and the statistics the decoders read off them.

A deck is stored as a map from length-k pattern (a '0'/'1' string) to its
multiplicity.  Only patterns with nonzero count are kept; all arithmetic is
on Python ints so nothing overflows.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Mapping, Tuple

from .seqcore import BinarySequence, SequenceLike, as_sequence


class InconsistentDeckError(ValueError):
    """A deck-derived count did not divide exactly."""


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


for _n in range(65):
    for _k in range(_n + 1):
        stirling2(_n, _k)


@dataclass(frozen=True)
class Deck:
    n: int
    k: int
    counts: Mapping[str, int] = field(compare=True)

    def __post_init__(self):
        clean = {p: int(c) for p, c in self.counts.items() if int(c)}
        for p, c in clean.items():
            if len(p) != self.k or p.strip("01"):
                raise ValueError(f"bad pattern {p!r} for k={self.k}")
            if c < 0:
                raise ValueError(f"negative count for {p!r}")
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    def __getitem__(self, pattern) -> int:
        return self.counts.get(str(pattern), 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k,
                "counts": {p: str(c) for p, c in self.counts.items()}}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Deck":
        try:
            n, k, counts = int(data["n"]), int(data["k"]), data["counts"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed deck: {exc}") from exc
        deck = cls(n, k, {p: int(c) for p, c in counts.items()})
        if not 0 <= k <= n:
            raise ValueError(f"deck has k={k} outside 0..n={n}")
        if deck.total != comb(n, k):
            raise InconsistentDeckError(
                f"deck multiplicities sum to {deck.total}, expected C({n},{k})={comb(n, k)}")
        return deck

    @classmethod
    def from_json(cls, text: str) -> "Deck":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class DeckStats:
    n: int
    k: int
    weight: int
    pattern_counts: Tuple[int, ...]  # n_{1^j 0} for j = 0..k-1
    power_sums: Tuple[int, ...]  # s_j for j = 1..k-1


def subsequence_count(x: SequenceLike, s: SequenceLike) -> int:
    """Number of index subsets of ``x`` that spell ``s``."""
    x = x if isinstance(x, str) else as_sequence(x).text
    s = s if isinstance(s, str) else as_sequence(s).text
    if x.strip("01") or s.strip("01"):
        raise ValueError("not a binary string")
    return _count_embeddings(x, s)


@lru_cache(maxsize=1 << 16)
def _count_embeddings(x: str, s: str) -> int:
    ways = [1] + [0] * len(s)
    for c in x:
        for j in range(len(s), 0, -1):
            if s[j - 1] == c:
                ways[j] += ways[j - 1]
    return ways[len(s)]


def _deck_counts(x: str, k: int) -> Dict[int, int]:
    # layers[L] maps a length-L pattern (as int) to its count among prefixes
    n = len(x)
    layers = [dict() for _ in range(k + 1)]
    layers[0][0] = 1
    for i, c in enumerate(x):
        b = 1 if c == "1" else 0
        remaining = n - i - 1
        for L in range(min(i + 1, k), 0, -1):
            if L + remaining < k:
                break
            src, dst = layers[L - 1], layers[L]
            for p, cnt in src.items():
                q = (p << 1) | b
                dst[q] = dst.get(q, 0) + cnt
    return layers[k]


def compute_deck(x: SequenceLike, k: int) -> Deck:
    """The k-deck of ``x`` as a pattern -> multiplicity map."""
    x = as_sequence(x)
    if not 0 <= k <= x.length:
        raise ValueError(f"k={k} outside 0..{x.length}")
    raw = _deck_counts(x.text, k)
    counts = {(format(p, f"0{k}b") if k else ""): c for p, c in raw.items()}
    return Deck(x.length, k, counts)


def deck_downscale(d: Deck, l: int) -> Deck:
    """Recover the l-deck from a k-deck, l <= k."""
    if not 0 <= l <= d.k:
        raise ValueError(f"l={l} outside 0..{d.k}")
    if l == d.k:
        return d
    acc: Dict[str, int] = {}
    for pattern, mult in d.counts.items():
        for sub, c in compute_deck(pattern, l).counts.items():
            acc[sub] = acc.get(sub, 0) + mult * c
    div = comb(d.n - l, d.k - l)
    out = {}
    for sub, total in acc.items():
        q, r = divmod(total, div)
        if r:
            raise InconsistentDeckError(
                f"count of {sub!r} ({total}) not divisible by C({d.n - l},{d.k - l})")
        out[sub] = q
    return Deck(d.n, l, out)


def pattern_count(d: Deck, j: int) -> int:
    """Occurrences of 1^j 0 in the underlying sequence, read off the deck."""
    if j < 0 or j + 1 > d.k:
        raise ValueError(f"pattern 1^{j}0 needs k >= {j + 1}, deck has k={d.k}")
    target = "1" * j + "0"
    total = sum(mult * _count_embeddings(p, target) for p, mult in d.counts.items())
    q, r = divmod(total, comb(d.n - j - 1, d.k - j - 1))
    if r:
        raise InconsistentDeckError(f"pattern 1^{j}0 count {total} is not an exact multiple")
    return q


def deck_weight(d: Deck) -> int:
    """Number of ones in the underlying sequence."""
    if d.k == 0:
        raise ValueError("the 0-deck carries no weight information")
    total = sum(mult * p.count("1") for p, mult in d.counts.items())
    q, r = divmod(total, comb(d.n - 1, d.k - 1))
    if r:
        raise InconsistentDeckError("weight is not an exact multiple")
    return q


def ends_with_one_count(x: SequenceLike, i: int) -> int:
    """n_i: number of length-i subsequences ending in a one."""
    x = as_sequence(x)
    if not 1 <= i <= max(x.length, 1):
        raise ValueError(f"i={i} outside 1..{x.length}")
    return sum(comb(j - 1, i - 1) for j, b in enumerate(x.bits, 1) if b)


def profile_pattern_count(profile, j: int) -> int:
    """Closed form of the 1^j 0 count: sum_l C(l-1, j) X_l."""
    return sum(comb(l - 1, j) * r for l, r in enumerate(profile, 1) if r)


def binomial_to_power_sums(binomial_moments, j_max: int):
    """Convert b_m = sum_l C(l-1, m) X_l (m = 0..j_max) to s_j = sum_l l^j X_l.

    Uses l^j = sum_i C(j, i) (l-1)^i and (l-1)^i = sum_m S(i, m) m! C(l-1, m).
    """
    out = []
    for j in range(1, j_max + 1):
        s = 0
        for i in range(j + 1):
            inner = sum(stirling2(i, m) * factorial(m) * binomial_moments[m] for m in range(i + 1))
            s += comb(j, i) * inner
        out.append(s)
    return tuple(out)


def power_sums(d: Deck, j_max: int) -> Tuple[int, ...]:
    """(s_1, ..., s_{j_max}) with s_j = sum_l l^j X_l, from the deck alone."""
    if j_max > d.k - 1:
        raise ValueError(f"j_max={j_max} needs k >= {j_max + 1}")
    moments = [pattern_count(d, m) for m in range(j_max + 1)]
    return binomial_to_power_sums(moments, j_max)


def deck_stats(d: Deck) -> DeckStats:
    if d.k < 1:
        raise ValueError("statistics need k >= 1")
    counts = tuple(pattern_count(d, j) for j in range(d.k))
    return DeckStats(d.n, d.k, deck_weight(d), counts, binomial_to_power_sums(counts, d.k - 1))


def fingerprint_width(n: int, k: int) -> int:
    """Bytes per count in a fingerprint; wide enough for C(n, k)."""
    return max(1, (comb(n, k).bit_length() + 7) // 8)


def fingerprint_header(n: int, k: int) -> bytes:
    return n.to_bytes(4, "big") + k.to_bytes(4, "big")


def fingerprint_of_deck(d: Deck) -> bytes:
    """Canonical bytes: header, then every length-k pattern's count in lex order."""
    w = fingerprint_width(d.n, d.k)
    body = b"".join(
        d.counts.get(format(p, f"0{d.k}b") if d.k else "", 0).to_bytes(w, "big")
        for p in range(1 << d.k))
    return fingerprint_header(d.n, d.k) + body


def deck_fingerprint(x: SequenceLike, k: int) -> bytes:
    """Injective byte encoding of the k-deck of ``x`` (for fixed n and k)."""
    return fingerprint_of_deck(compute_deck(x, k))

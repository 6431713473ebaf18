"""Binary sequences and their zero-run profiles.

A sequence ``x`` of length ``n`` and weight ``w`` is in bijection with its
zero-run profile ``X = (X_1, ..., X_{w+1})``: ``X_i`` counts the zeros
between the ``(i-1)``-th and ``i``-th one, with virtual ones placed before
the first and after the last symbol.  Deleting or inserting zeros only ever
lowers or raises entries of ``X``, so every zero-only edit in this package is
carried out on profiles.

Positions handed to :func:`ones_before` and :func:`delete_zeros` are
1-indexed, matching ``S(x) = sum_j j * x_j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple, Union

Profile = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class BinarySequence:
    """Immutable binary word packed into an int (first symbol is the MSB).

    Ordering is by length, then lexicographic on the symbols.
    """

    length: int
    value: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if not 0 <= self.value < (1 << self.length) or (self.length == 0 and self.value):
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> "BinarySequence":
        text = text.strip()
        if text.strip("01"):
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinarySequence":
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"symbol {b!r} is not 0 or 1")
            value = (value << 1) | b
        return cls(len(bits), value)

    @cached_property
    def text(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    @cached_property
    def bits(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.text)

    @cached_property
    def weight(self) -> int:
        return bin(self.value).count("1")

    @property
    def zeros(self) -> int:
        return self.length - self.weight

    @cached_property
    def profile(self) -> Profile:
        return tuple(len(run) for run in self.text.split("1"))

    def __len__(self):
        return self.length

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __add__(self, other: "BinarySequence") -> "BinarySequence":
        other = as_sequence(other)
        return BinarySequence(self.length + other.length,
                              (self.value << other.length) | other.value)

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"BinarySequence('{self.text}')"


SequenceLike = Union[BinarySequence, str, Sequence[int]]


def as_sequence(x: SequenceLike) -> BinarySequence:
    """Coerce a '0'/'1' string or an iterable of bits to a BinarySequence."""
    if isinstance(x, BinarySequence):
        return x
    if isinstance(x, str):
        return BinarySequence.parse(x)
    return BinarySequence.from_bits(x)


def to_profile(x: SequenceLike) -> Profile:
    """Zero-run profile of ``x``; has ``weight + 1`` entries."""
    return as_sequence(x).profile


def from_profile(profile: Iterable[int]) -> BinarySequence:
    """Inverse of :func:`to_profile`."""
    runs = list(profile)
    if not runs:
        raise ValueError("a profile has at least one entry")
    if any(r < 0 for r in runs):
        raise ValueError(f"negative run length in {runs}")
    return BinarySequence.parse("1".join("0" * r for r in runs))


def ones_before(x: SequenceLike, m: int) -> int:
    """Number of ones strictly before 1-indexed position ``m``."""
    x = as_sequence(x)
    if not 1 <= m <= x.length:
        raise IndexError(f"position {m} outside 1..{x.length}")
    return x.text.count("1", 0, m - 1)


def delete_zeros(x: SequenceLike, positions: Iterable[int]) -> BinarySequence:
    """Delete the zeros at the given 1-indexed positions."""
    x = as_sequence(x)
    positions = set(positions)
    text = x.text
    for p in positions:
        if not 1 <= p <= x.length:
            raise IndexError(f"position {p} outside 1..{x.length}")
        if text[p - 1] != "0":
            raise ValueError(f"position {p} holds a one; only zeros may be deleted")
    return BinarySequence.parse("".join(c for i, c in enumerate(text, 1) if i not in positions))


def deleted_one_counts(x: SequenceLike, positions: Iterable[int]) -> Tuple[int, ...]:
    """Sorted one-counts ``1_x(k_i)`` of the deleted positions (the multiset R)."""
    x = as_sequence(x)
    positions = sorted(set(positions))
    for p in positions:
        if x.text[p - 1] != "0":
            raise ValueError(f"position {p} holds a one")
    return tuple(sorted(ones_before(x, p) for p in positions))


def alternating(n: int) -> BinarySequence:
    """The alternating string 0101... of length n."""
    return BinarySequence.parse(("01" * (n // 2 + 1))[:n])


def all_sequences(n: int):
    """Every sequence of length n, in lexicographic order."""
    for v in range(1 << n):
        yield BinarySequence(n, v)

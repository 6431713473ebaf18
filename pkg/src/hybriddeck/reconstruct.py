"""Single-trace decoders.

Two routes back from an asymmetric trace to the original sequence:

* :func:`vt_decode_zero_deletion` for one deleted zero, using only the
  residue ``sum_j j x_j mod (n+1)`` (readable from the 2-deck);
* :func:`reconstruct_single_trace` for ``t`` deleted zeros, using the
  ``(t+1)``-deck.  The deck minus the trace gives binomial moments of the
  multiset R of one-counts in front of the deleted zeros; these become power
  sums, then elementary symmetric polynomials through Newton's identities,
  and R is read off as the integer roots of the resulting polynomial.

Everything is exact integer arithmetic.  Any inexact step is reported as a
:class:`ReconstructionError` carrying the label of the failing stage.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence, Tuple

from .deck import (Deck, InconsistentDeckError, compute_deck, deck_downscale,
                   deck_weight, pattern_count, profile_pattern_count, stirling2)
from .seqcore import BinarySequence, SequenceLike, as_sequence, from_profile

WEIGHT_CONFLICT = "WEIGHT_CONFLICT"
INEXACT_MOMENTS = "INEXACT_MOMENTS"
ROOT_FAILURE = "ROOT_FAILURE"


class ReconstructionError(ValueError):
    """No sequence is consistent with the given deck and trace(s)."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


@dataclass(frozen=True)
class VtChecksum:
    residue: int
    modulus: int

    def __int__(self):
        return self.residue


def vt_checksum(x: SequenceLike) -> VtChecksum:
    x = as_sequence(x)
    s = sum(j for j, b in enumerate(x.bits, 1) if b)
    return VtChecksum(s % (x.length + 1), x.length + 1)


def vt_checksum_from_deck(d: Deck) -> VtChecksum:
    """The same residue computed as (n_1 + n_2) mod (n+1) from a deck with k >= 2."""
    if d.k < 2:
        raise ValueError("the VT residue needs the 2-deck")
    n1 = deck_weight(d)
    # n_2 counts pairs (i < j) with x_j = 1: 01 and 11 patterns
    d2 = deck_downscale(d, 2)
    n2 = d2["01"] + d2["11"]
    return VtChecksum((n1 + n2) % (d.n + 1), d.n + 1)


def vt_decode_zero_deletion(trace: SequenceLike, a, n: int) -> BinarySequence:
    """Reinsert the one zero missing from ``trace`` so the VT residue becomes ``a``.

    A zero inserted with r ones to its right raises sum_j j x_j by exactly r,
    so r is determined mod n+1, and r <= weight < n+1 makes it unique.
    """
    trace = as_sequence(trace)
    if trace.length != n - 1:
        raise ValueError(f"trace length {trace.length} != n-1 = {n - 1}")
    a = int(a)
    s = sum(j for j, b in enumerate(trace.bits, 1) if b)
    r = (a - s) % (n + 1)
    w = trace.weight
    if r > w:
        raise ReconstructionError(ROOT_FAILURE, "checksum inconsistent with trace")
    runs = list(trace.profile)
    runs[w - r] += 1
    return from_profile(runs)


def deck_trace_moments(d: Deck, trace: SequenceLike, n: int) -> Tuple[int, ...]:
    """delta_j = n_{1^j 0}(x) - n_{1^j 0}(trace) for j = 1..t."""
    trace = as_sequence(trace)
    t = n - trace.length
    if t < 1:
        raise ValueError("moments need at least one deletion")
    if d.n != n:
        raise ValueError(f"deck is for n={d.n}, not {n}")
    if d.k < t + 1:
        raise ValueError(f"{t} deletions need a deck with k >= {t + 1}, got {d.k}")
    try:
        w = deck_weight(d)
        zeros = pattern_count(d, 0)
        moments = tuple(pattern_count(d, j) - profile_pattern_count(trace.profile, j)
                        for j in range(1, t + 1))
    except InconsistentDeckError as exc:
        raise ReconstructionError(INEXACT_MOMENTS, str(exc)) from exc
    if w != trace.weight or zeros - trace.zeros != t:
        raise ReconstructionError(
            WEIGHT_CONFLICT,
            f"deck has weight {w} and {zeros} zeros; trace has weight {trace.weight} "
            f"and {trace.zeros} zeros with {t} deletions")
    return moments


def moments_to_power_sums(moments: Sequence[int]) -> Tuple[int, ...]:
    """p_j = sum_m S(j, m) m! delta_m, since r^j = sum_m S(j, m) m! C(r, m)."""
    return tuple(sum(stirling2(j, m) * factorial(m) * moments[m - 1] for m in range(1, j + 1))
                 for j in range(1, len(moments) + 1))


def newton_to_elementary(p: Sequence[int]) -> Tuple[int, ...]:
    """Elementary symmetric polynomials e_1..e_t from power sums p_1..p_t."""
    e = [1]
    for k in range(1, len(p) + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * p[i - 1] for i in range(1, k + 1))
        q, r = divmod(acc, k)
        if r:
            raise ReconstructionError(INEXACT_MOMENTS, f"Newton step {k} does not divide exactly")
        e.append(q)
    return tuple(e[1:])


def _divide_root(coeffs, r):
    # synthetic division of a highest-first coefficient list by (lambda - r)
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + r * out[-1])
    return out[:-1], out[-1]


def integer_roots(e: Sequence[int], wt: int) -> Tuple[int, ...]:
    """Roots in {0..wt}, with multiplicity, of sum_i (-1)^i e_i lambda^(t-i)."""
    t = len(e)
    poly = [1] + [(-1) ** i * ei for i, ei in enumerate(e, 1)]
    roots = []
    for r in range(wt + 1):
        while len(poly) > 1:
            quotient, rem = _divide_root(poly, r)
            if rem:
                break
            roots.append(r)
            poly = quotient
        if len(poly) == 1:
            break
    if len(roots) != t or poly != [1]:
        raise ReconstructionError(
            ROOT_FAILURE, f"found roots {roots} in 0..{wt}, expected {t} of them")
    return tuple(roots)


def apply_roots(trace: SequenceLike, roots: Sequence[int]) -> BinarySequence:
    """Put back one zero after the r-th one for every r in ``roots``."""
    trace = as_sequence(trace)
    runs = list(trace.profile)
    for r, mult in Counter(roots).items():
        if not 0 <= r <= trace.weight:
            raise ValueError(f"root {r} outside 0..{trace.weight}")
        runs[r] += mult
    return from_profile(runs)


def reconstruct_single_trace(trace: SequenceLike, d: Deck, n: int,
                             verify: bool = True) -> BinarySequence:
    """Recover x from one zero-deleted trace and a deck of order >= t+1.

    With ``verify`` the answer is checked to reproduce ``d`` exactly.
    """
    trace = as_sequence(trace)
    t = n - trace.length
    if t < 0:
        raise ValueError(f"trace is longer than n={n}")
    if d.n != n:
        raise ValueError(f"deck is for n={d.n}, not {n}")
    if t == 0:
        if verify and compute_deck(trace, d.k) != d:
            raise ReconstructionError(WEIGHT_CONFLICT, "trace does not reproduce the deck")
        return trace
    moments = deck_trace_moments(d, trace, n)
    p = moments_to_power_sums(moments)
    e = newton_to_elementary(p)
    roots = integer_roots(e, trace.weight)
    x = apply_roots(trace, roots)
    if verify and compute_deck(x, d.k) != d:
        raise ReconstructionError(ROOT_FAILURE, f"candidate {x} does not reproduce the deck")
    return x


def binomial_moments(roots: Sequence[int], t: int) -> Tuple[int, ...]:
    """delta_j = sum_r C(r, j), j = 1..t; the forward map of the decoder."""
    return tuple(sum(comb(r, j) for r in roots) for j in range(1, t + 1))


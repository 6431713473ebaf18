"""Brute-force reference implementations, on plain strings, sharing no code with the package."""
import itertools
from collections import Counter
from functools import lru_cache


def words(n):
    return ["".join(p) for p in itertools.product("01", repeat=n)]


def deck(x, k):
    """k-deck by listing all C(n, k) index subsets."""
    return Counter("".join(x[i] for i in idx) for idx in itertools.combinations(range(len(x)), k))


def embeddings(x, s):
    return sum(1 for idx in itertools.combinations(range(len(x)), len(s))
               if all(x[i] == c for i, c in zip(idx, s)))


def deletions(x, t):
    """D_t(x) by deleting every t-subset of zero positions."""
    zeros = [i for i, c in enumerate(x) if c == "0"]
    out = set()
    for drop in itertools.combinations(zeros, t):
        drop = set(drop)
        out.add("".join(c for i, c in enumerate(x) if i not in drop))
    return out


@lru_cache(maxsize=None)
def insertions(x, t):
    """I_t(x) by inserting one zero at a time at every gap."""
    level = {x}
    for _ in range(t):
        level = {w[:i] + "0" + w[i:] for w in level for i in range(len(w) + 1)}
    return frozenset(level)


def is_zero_subsequence(u, w):
    """Whether u is w with some zeros removed (greedy match, ones must align)."""
    i = 0
    for c in w:
        if i < len(u) and u[i] == c:
            i += 1
        elif c == "1":
            return False
    return i == len(u)


def elementary(values, k):
    return sum(_prod(c) for c in itertools.combinations(values, k))


def _prod(xs):
    out = 1
    for v in xs:
        out *= v
    return out


def f_bruteforce(n, t, M=1):
    ws = words(n)
    balls = {w: deletions(w, t) if t <= w.count("0") else set() for w in ws}
    for k in range(n + 1):
        groups = {}
        for w in ws:
            groups.setdefault(frozenset(deck(w, k).items()), []).append(w)
        if not any(len(balls[a] & balls[b]) >= M
                   for g in groups.values() for a, b in itertools.combinations(g, 2)):
            return k
    return None

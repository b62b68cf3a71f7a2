"""Brute-force oracles written straight from the definitions.

Nothing here imports the constructions they are used to check.
"""
from __future__ import annotations

import itertools
from functools import lru_cache


def oracle_successor(u: str, v: str) -> bool:
    """<u> + 1 = <v> (mod 2^n), by integer arithmetic."""
    if len(u) != len(v) or not u:
        raise ValueError("u and v need the same positive length")
    n = len(u)
    return (int(u, 2) + 1) % (2 ** n) == int(v, 2) % (2 ** n)


@lru_cache(maxsize=None)
def immerman_words(max_len: int) -> frozenset[str]:
    """Every word of the Immerman language with length <= max_len."""
    out = set()
    n = 1
    while True:
        word = "a".join(format(i, f"0{n}b") for i in range(2 ** n))
        if len(word) > max_len:
            return frozenset(out)
        out.add(word)
        n += 1


def oracle_immerman(w: str) -> bool:
    return w in immerman_words(len(w))


@lru_cache(maxsize=None)
def modified_immerman_words(max_len: int) -> frozenset[str]:
    out = set()
    n = 1
    while True:
        parts = []
        for i in range(2 ** n):
            b = format(i, f"0{n}b")
            parts.append(b[::-1] if i % 2 == 1 else b)
        word = "a".join(parts)
        if len(word) > max_len:
            return frozenset(out)
        out.add(word)
        n += 1


def oracle_in_A(w: str) -> bool:
    """Search every split x u a v y with u, v nonempty bit strings of equal
    length, x empty or ending in a, y empty or starting with a."""
    n = len(w)
    for k, c in enumerate(w):
        if c != "a":
            continue
        for length in range(1, min(k, n - k - 1) + 1):
            u = w[k - length:k]
            v = w[k + 1:k + 1 + length]
            if not set(u + v) <= {"0", "1"}:
                continue
            left_ok = k - length == 0 or w[k - length - 1] == "a"
            right_ok = k + 1 + length == n or w[k + 1 + length] == "a"
            if left_ok and right_ok and (int(u, 2) + 1) % (2 ** length) != int(v, 2):
                return True
    return False


def oracle_wotschke(w: str) -> bool:
    return any(w == ("a" * n + "b") * n for n in range(len(w) + 1))


def oracle_plus(t) -> bool:
    a, b, c = t
    return a + b == c


def unary_structures(n: int, max_len: int):
    """(tuple, word) for every unary V_n-structure of length <= max_len.

    Words are tuples of tokens: ``.`` or ``x1+x3`` style.
    """
    for m in range(1, max_len + 1):
        for t in itertools.product(range(1, m + 1), repeat=n):
            cells = []
            for p in range(1, m + 1):
                here = [f"x{i + 1}" for i, c in enumerate(t) if c == p]
                cells.append("+".join(here) if here else ".")
            yield t, tuple(cells)


def linear_points(base, periods, limit: int) -> set[tuple[int, ...]]:
    """All base + sum k_j p_j with every coordinate <= limit, by coefficient sweep."""
    ranges = []
    for p in periods:
        top = max(p)
        ranges.append(range(0, limit // top + 1) if top else range(1))
    out = set()
    for ks in itertools.product(*ranges):
        point = tuple(b + sum(k * p[i] for k, p in zip(ks, periods)) for i, b in enumerate(base))
        if max(point, default=0) <= limit:
            out.add(point)
    return out

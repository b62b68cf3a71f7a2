"""Unary V_n-structures over the alphabet Gamma_n = {0} x P({x_1..x_n}).

A Gamma_n symbol is written as a token: ``.`` for the empty set and
``x1+x3`` for ``{x_1, x_3}`` (indices ascending).  Words are tuples of
tokens; :func:`parse_word` and :func:`format_word` convert to and from the
whitespace-separated wire format.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

PAD = "."

_TOKEN_RE = re.compile(r"^x[1-9][0-9]*(\+x[1-9][0-9]*)*$")


class GammaError(ValueError):
    pass


@lru_cache(maxsize=None)
def symbol_set(token: str) -> frozenset[int]:
    """Variable indices carried by a token (``"x1+x3"`` -> ``{1, 3}``)."""
    if token == PAD:
        return frozenset()
    if not _TOKEN_RE.match(token):
        raise GammaError(f"not a Gamma token: {token!r}")
    idx = [int(part[1:]) for part in token.split("+")]
    if idx != sorted(set(idx)):
        raise GammaError(f"indices must be strictly ascending: {token!r}")
    return frozenset(idx)


def token_of(indices: Iterable[int]) -> str:
    idx = sorted(set(indices))
    if not idx:
        return PAD
    if idx[0] < 1:
        raise GammaError("variable indices start at 1")
    return "+".join(f"x{i}" for i in idx)


def subset_token(n: int, mask: int) -> str:
    """Token for V_mask: bit j-1 of ``mask`` set iff x_j is in the set."""
    return token_of(j + 1 for j in range(n) if mask >> j & 1)


def gamma_alphabet(n: int) -> tuple[str, ...]:
    """Gamma_n with the padding symbol first, then subsets by bitmask."""
    if n < 1:
        raise GammaError("n must be >= 1")
    return tuple(subset_token(n, mask) for mask in range(1 << n))


def parse_word(text: str) -> tuple[str, ...]:
    word = tuple(text.split())
    for tok in word:
        symbol_set(tok)
    return word


def format_word(word: Sequence[str]) -> str:
    return " ".join(word)


def _within(word: Sequence[str], n: int) -> bool:
    return all(max(symbol_set(t), default=0) <= n for t in word)


def is_unary_structure(word: Sequence[str], n: int) -> bool:
    """Each of x_1..x_n occurs in exactly one position's set."""
    seen: set[int] = set()
    for tok in word:
        s = symbol_set(tok)
        if seen & s or max(s, default=0) > n:
            return False
        seen |= s
    return len(seen) == n


def kernel(word: Sequence[str]) -> tuple[str, ...]:
    word = tuple(word)
    end = len(word)
    while end and word[end - 1] == PAD:
        end -= 1
    return word[:end]


def tuple_of(word: Sequence[str], n: int) -> tuple[int, ...]:
    if not is_unary_structure(word, n):
        raise GammaError(f"not a unary V_{n}-structure: {format_word(word)!r}")
    pos = {}
    for p, tok in enumerate(word, 1):
        for i in symbol_set(tok):
            pos[i] = p
    return tuple(pos[i] for i in range(1, n + 1))


def encode(t: Sequence[int], m: int | None = None) -> tuple[str, ...]:
    """Place x_i at position t_i and pad with ``.`` up to length ``m``."""
    t = tuple(t)
    if not t:
        raise GammaError("empty tuple")
    if min(t) < 1:
        raise GammaError("positions start at 1")
    top = max(t)
    m = top if m is None else m
    if m < top:
        raise GammaError(f"length {m} is shorter than the largest position {top}")
    cells: list[set[int]] = [set() for _ in range(m)]
    for i, c in enumerate(t, 1):
        cells[c - 1].add(i)
    return tuple(token_of(c) for c in cells)


@dataclass(frozen=True)
class VnStructure:
    n: int
    word: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if not is_unary_structure(self.word, self.n):
            raise GammaError(f"not a unary V_{self.n}-structure: {format_word(self.word)!r}")

    @classmethod
    def parse(cls, n: int, text: str) -> "VnStructure":
        return cls(n, parse_word(text))

    @classmethod
    def of_tuple(cls, t: Sequence[int], m: int | None = None) -> "VnStructure":
        return cls(len(tuple(t)), encode(t, m))

    def kernel(self) -> "VnStructure":
        return VnStructure(self.n, kernel(self.word))

    @property
    def tuple(self) -> tuple[int, ...]:
        return tuple_of(self.word, self.n)

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class NumRelation:
    arity: int
    bound: int
    tuples: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "tuples", frozenset(tuple(t) for t in self.tuples))
        for t in self.tuples:
            if len(t) != self.arity:
                raise ValueError(f"tuple {t} does not have arity {self.arity}")
            if min(t, default=1) < 1:
                raise ValueError(f"tuple {t} has a component below 1")

    def __contains__(self, t) -> bool:
        return tuple(t) in self.tuples

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(sorted(self.tuples))


def structures(n: int, max_len: int, min_len: int = 1) -> Iterator[tuple[str, ...]]:
    """All unary V_n-structures with length in [min_len, max_len].

    A structure is determined by its length and its tuple, so they are
    generated directly rather than filtered out of Gamma_n^*.
    """
    for m in range(max(min_len, 1), max_len + 1):
        for t in itertools.product(range(1, m + 1), repeat=n):
            yield encode(t, m)


def relation_of_language(member: Callable[[tuple], bool], n: int, max_len: int) -> NumRelation:
    """``{tuple_of(w) : w a structure, |w| <= max_len, member(w)}``."""
    found = {tuple_of(w, n) for w in structures(n, max_len) if member(w)}
    return NumRelation(n, max_len, frozenset(found))


def is_kernel_closed(language: Iterable[Sequence[str]]) -> bool:
    members = {tuple(w) for w in language}
    return all(kernel(w) in members for w in members)


def neutralize_member(member: Callable, e: str) -> Callable:
    """Tester for the neutral-letter closure: delete every ``e`` first."""

    def tester(word):
        if isinstance(word, str):
            return member(word.replace(e, ""))
        return member(tuple(s for s in word if s != e))
    return tester


def order_type(t: Sequence[int]) -> tuple[int, ...]:
    """Dense ranks: ``(5, 2, 5)`` -> ``(1, 0, 1)``."""
    ranks = {v: i for i, v in enumerate(sorted(set(t)))}
    return tuple(ranks[v] for v in t)


def ordered_partition(t: Sequence[int]) -> tuple[frozenset[int], ...]:
    """Variables grouped by position, left to right (the V_1..V_k of a shape)."""
    groups: dict[int, set[int]] = {}
    for i, c in enumerate(t, 1):
        groups.setdefault(c, set()).add(i)
    return tuple(frozenset(groups[c]) for c in sorted(groups))


def neutral_union_nfa(partitions: Sequence[Sequence[Iterable[int]]], n: int):
    """NFA for the union of ``.* V_1 .* V_2 ... V_k .*`` over the partitions.

    Blocks may be given as index sets or as tokens.
    """
    from .automata.nfa import Nfa

    full = set(range(1, n + 1))
    transitions: dict = {}
    initial, accepting = set(), set()
    for b, seq in enumerate(partitions):
        blocks = [symbol_set(x) if isinstance(x, str) else frozenset(x) for x in seq]
        union: set[int] = set()
        for blk in blocks:
            if not blk or union & blk:
                raise GammaError(f"blocks {blocks} do not form an ordered partition")
            union |= blk
        if union != full:
            raise GammaError(f"blocks {blocks} do not cover x1..x{n}")
        for j, blk in enumerate(blocks):
            transitions.setdefault(((b, j), PAD), set()).add((b, j))
            transitions.setdefault(((b, j), token_of(blk)), set()).add((b, j + 1))
        last = (b, len(blocks))
        transitions.setdefault((last, PAD), set()).add(last)
        initial.add((b, 0))
        accepting.add(last)
    states = {s for (s, _), _t in transitions.items()} | {
        d for ds in transitions.values() for d in ds
    }
    return Nfa(states, gamma_alphabet(n), transitions, initial, accepting)

"""Finite automata with epsilon moves, subset construction and products."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence

EPS = None  # label of an epsilon move


class NotDeterministicError(ValueError):
    pass


@dataclass(frozen=True)
class Nfa:
    """``transitions[(state, symbol)]`` is a set of successors; symbol ``None`` is epsilon."""

    states: frozenset
    alphabet: tuple
    transitions: Mapping
    initial: frozenset
    accepting: frozenset

    def __init__(self, states, alphabet, transitions, initial, accepting):
        trans = {k: frozenset(v) for k, v in dict(transitions).items() if v}
        object.__setattr__(self, "states", frozenset(states))
        object.__setattr__(self, "alphabet", tuple(alphabet))
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "initial", frozenset(initial))
        object.__setattr__(self, "accepting", frozenset(accepting))
        symbols = set(self.alphabet)
        for (q, a), ds in trans.items():
            if q not in self.states or not ds <= self.states:
                raise ValueError(f"transition {(q, a)} -> {set(ds)} uses an undeclared state")
            if a is not EPS and a not in symbols:
                raise ValueError(f"transition {(q, a)} reads undeclared symbol {a!r}")
        if not self.initial <= self.states or not self.accepting <= self.states:
            raise ValueError("initial and accepting states must be declared")

    # incremental interface: a configuration is an epsilon-closed frozenset
    def closure(self, qs: Iterable) -> frozenset:
        seen = set(qs)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for p in self.transitions.get((q, EPS), ()):
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
        return frozenset(seen)

    def start(self) -> frozenset:
        return self.closure(self.initial)

    def step(self, qs: frozenset, symbol) -> frozenset:
        nxt = set()
        for q in qs:
            nxt |= self.transitions.get((q, symbol), frozenset())
        return self.closure(nxt)

    def is_accepting(self, qs: frozenset) -> bool:
        return not qs.isdisjoint(self.accepting)

    def accepts(self, word: Sequence) -> bool:
        qs = self.start()
        for a in word:
            if not qs:
                return False
            qs = self.step(qs, a)
        return self.is_accepting(qs)

    def is_deterministic(self) -> bool:
        """One initial state, no epsilon moves, exactly one successor per symbol."""
        if len(self.initial) != 1:
            return False
        if any(a is EPS for (_q, a) in self.transitions):
            return False
        return all(
            len(self.transitions.get((q, a), ())) == 1 for q in self.states for a in self.alphabet
        )


Dfa = Nfa


def determinize(nfa: Nfa, alphabet: Sequence | None = None) -> Nfa:
    """Complete DFA by the subset construction; states are frozensets."""
    alphabet = tuple(nfa.alphabet if alphabet is None else alphabet)
    start = nfa.start()
    seen = {start}
    todo = deque([start])
    trans = {}
    while todo:
        s = todo.popleft()
        for a in alphabet:
            t = nfa.step(s, a) if a in nfa.alphabet else frozenset()
            trans[(s, a)] = {t}
            if t not in seen:
                seen.add(t)
                todo.append(t)
    acc = {s for s in seen if nfa.is_accepting(s)}
    return Nfa(seen, alphabet, trans, {start}, acc)


def relabel(nfa: Nfa) -> Nfa:
    """Rename states to 0..k-1 in breadth-first order from the initial states."""
    order: dict[Hashable, int] = {}
    todo = deque(sorted(nfa.initial, key=repr))
    for q in todo:
        order[q] = len(order)
    succ: dict = {}
    for (q, a), ds in nfa.transitions.items():
        succ.setdefault(q, []).append((a, ds))
    while todo:
        q = todo.popleft()
        for _a, ds in sorted(succ.get(q, ()), key=lambda e: repr(e[0])):
            for p in sorted(ds, key=repr):
                if p not in order:
                    order[p] = len(order)
                    todo.append(p)
    for q in sorted(nfa.states - set(order), key=repr):
        order[q] = len(order)
    trans = {(order[q], a): {order[p] for p in ds} for (q, a), ds in nfa.transitions.items()}
    return Nfa(
        order.values(), nfa.alphabet, trans,
        {order[q] for q in nfa.initial}, {order[q] for q in nfa.accepting},
    )


def complement(dfa: Nfa) -> Nfa:
    if not dfa.is_deterministic():
        raise NotDeterministicError("complement needs a complete DFA; determinize first")
    return Nfa(dfa.states, dfa.alphabet, dfa.transitions, dfa.initial, dfa.states - dfa.accepting)


_OPS: dict[str, Callable[[bool, bool], bool]] = {
    "and": lambda x, y: x and y,
    "or": lambda x, y: x or y,
    "minus": lambda x, y: x and not y,
}


def product(a: Nfa, b: Nfa, op: str) -> Nfa:
    """Intersection (``and``), union (``or``) or difference (``minus``)."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}; use one of {sorted(_OPS)}")
    combine = _OPS[op]
    sigma = tuple(dict.fromkeys(a.alphabet + b.alphabet))
    da, db = determinize(a, sigma), determinize(b, sigma)
    (sa,), (sb,) = da.initial, db.initial
    start = (sa, sb)
    seen = {start}
    todo = deque([start])
    trans = {}
    while todo:
        p, q = todo.popleft()
        for x in sigma:
            (p2,), (q2,) = da.transitions[(p, x)], db.transitions[(q, x)]
            t = (p2, q2)
            trans[((p, q), x)] = {t}
            if t not in seen:
                seen.add(t)
                todo.append(t)
    acc = {(p, q) for (p, q) in seen if combine(p in da.accepting, q in db.accepting)}
    return relabel(Nfa(seen, sigma, trans, {start}, acc))


def enumerate_words(nfa: Nfa, max_len: int, as_str: bool | None = None) -> set:
    """Accepted words of length <= max_len.

    Words are strings when every symbol is a single character (or when
    ``as_str`` says so), tuples otherwise.
    """
    if as_str is None:
        as_str = all(isinstance(a, str) and len(a) == 1 for a in nfa.alphabet)
    out = set()
    layer = {(): nfa.start()}
    for n in range(max_len + 1):
        for w, qs in layer.items():
            if nfa.is_accepting(qs):
                out.add("".join(w) if as_str else w)
        if n == max_len:
            break
        nxt = {}
        for w, qs in layer.items():
            for a in nfa.alphabet:
                ps = nfa.step(qs, a)
                if ps:
                    nxt[w + (a,)] = ps
        layer = nxt
    return out


def from_word_set(words: Iterable[Sequence], alphabet: Sequence) -> Nfa:
    """Trie automaton for a finite set of words."""
    trans: dict = {}
    acc = set()
    states = {()}
    for w in words:
        w = tuple(w)
        for i, a in enumerate(w):
            trans.setdefault((w[:i], a), set()).add(w[: i + 1])
            states.add(w[: i + 1])
        acc.add(w)
    return Nfa(states, alphabet, trans, {()}, acc)


def star_of_symbols(symbols: Iterable, alphabet: Sequence) -> Nfa:
    """``S*`` for a set of single symbols S."""
    return Nfa({0}, alphabet, {(0, a): {0} for a in symbols}, {0}, {0})


def nfa_accepts(nfa: Nfa, word: Sequence) -> bool:
    return nfa.accepts(word)

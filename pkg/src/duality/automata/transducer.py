"""Finite-state transducers defined by their unique accepting run."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence


class AmbiguousRunError(ValueError):
    pass


@dataclass(frozen=True)
class Transducer:
    """``transitions[(state, symbol)]`` is a tuple of ``(target, output word)``."""

    states: frozenset
    alphabet: tuple
    output_alphabet: tuple
    transitions: Mapping
    initial: frozenset
    accepting: frozenset

    def __init__(self, states, alphabet, output_alphabet, transitions, initial, accepting):
        object.__setattr__(self, "states", frozenset(states))
        object.__setattr__(self, "alphabet", tuple(alphabet))
        object.__setattr__(self, "output_alphabet", tuple(output_alphabet))
        trans = {k: tuple((p, tuple(out)) for p, out in v) for k, v in dict(transitions).items()}
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "initial", frozenset(initial))
        object.__setattr__(self, "accepting", frozenset(accepting))
        sigma, delta = set(self.alphabet), set(self.output_alphabet)
        for (q, a), moves in trans.items():
            if q not in self.states or a not in sigma:
                raise ValueError(f"bad transition key {(q, a)}")
            for p, out in moves:
                if p not in self.states or not set(out) <= delta:
                    raise ValueError(f"bad transition {(q, a)} -> {(p, out)}")

    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(len(v) <= 1 for v in self.transitions.values())

    def runs(self, word: Sequence) -> list[tuple]:
        """Outputs of all accepting runs (one entry per run)."""
        # layer maps (state, output) to the number of runs reaching it
        layer: dict = {(q, ()): 1 for q in self.initial}
        for a in word:
            nxt: dict = {}
            for (q, out), count in layer.items():
                for p, emitted in self.transitions.get((q, a), ()):
                    key = (p, out + emitted)
                    nxt[key] = nxt.get(key, 0) + count
            layer = nxt
            if not layer:
                return []
        result = []
        for (q, out), count in sorted(layer.items(), key=repr):
            if q in self.accepting:
                result.extend([out] * count)
        return result

    def apply(self, word: Sequence) -> tuple | None:
        """Output along the unique accepting run, or None when there is none."""
        outs = self.runs(word)
        if not outs:
            return None
        if len(outs) > 1:
            raise AmbiguousRunError(f"{len(outs)} accepting runs on {tuple(word)!r}")
        return outs[0]


def transduce(machine: Transducer, word: Sequence) -> tuple | None:
    return machine.apply(word)


def compose(first: Transducer, second: Transducer, word: Sequence) -> tuple | None:
    """``second(first(word))``; None if either rejects."""
    mid = first.apply(word)
    return None if mid is None else second.apply(mid)

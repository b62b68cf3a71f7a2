"""Pushdown automata accepting by final state.

A rule ``(q, a, top) -> (p, push)`` pops ``top`` and pushes ``push``, whose
first symbol becomes the new top.  ``a`` is ``None`` for an epsilon move.
Stacks are tuples with the top at the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

EPS = None


class NondeterminismError(ValueError):
    pass


class StackBoundError(RuntimeError):
    """A live branch outgrew the configured stack cap."""


@dataclass(frozen=True)
class Rule:
    state: object
    symbol: object  # None for epsilon
    top: object
    target: object
    push: tuple


def _as_rules(rules) -> tuple[Rule, ...]:
    out = []
    for r in rules:
        if not isinstance(r, Rule):
            q, a, top, p, push = r
            r = Rule(q, a, top, p, tuple(push))
        out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class _Pda:
    states: frozenset
    alphabet: tuple
    stack_alphabet: tuple
    bottom: object
    rules: tuple
    initial: object
    accepting: frozenset
    initial_stack: tuple = ()

    def __init__(self, states, alphabet, stack_alphabet, bottom, rules, initial, accepting,
                 initial_stack=None, max_push: int | None = None):
        object.__setattr__(self, "states", frozenset(states))
        object.__setattr__(self, "alphabet", tuple(alphabet))
        object.__setattr__(self, "stack_alphabet", tuple(stack_alphabet))
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "rules", _as_rules(rules))
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "accepting", frozenset(accepting))
        object.__setattr__(self, "initial_stack", tuple(initial_stack) if initial_stack is not None else (bottom,))
        self._validate(max_push)
        table: dict = {}
        for r in self.rules:
            table.setdefault((r.state, r.symbol, r.top), []).append((r.target, r.push))
        object.__setattr__(self, "_table", {k: tuple(v) for k, v in table.items()})

    def _validate(self, max_push) -> None:
        gamma = set(self.stack_alphabet)
        sigma = set(self.alphabet)
        if self.bottom not in gamma:
            raise ValueError("bottom marker must be a stack symbol")
        if self.initial not in self.states or not self.accepting <= self.states:
            raise ValueError("initial and accepting states must be declared")
        if not self.initial_stack or self.initial_stack[0] != self.bottom:
            raise ValueError("initial stack must start with the bottom marker")
        for r in self.rules:
            if r.state not in self.states or r.target not in self.states:
                raise ValueError(f"rule {r} uses an undeclared state")
            if r.symbol is not EPS and r.symbol not in sigma:
                raise ValueError(f"rule {r} reads undeclared symbol {r.symbol!r}")
            if r.top not in gamma or not set(r.push) <= gamma:
                raise ValueError(f"rule {r} uses an undeclared stack symbol")
            if max_push is not None and len(r.push) > max_push:
                raise ValueError(f"rule {r} pushes more than {max_push} symbols")
            if r.top == self.bottom:
                if not r.push or r.push[-1] != self.bottom or self.bottom in r.push[:-1]:
                    raise ValueError(f"rule {r} must keep the bottom marker in place")
            elif self.bottom in r.push:
                raise ValueError(f"rule {r} pushes the bottom marker")

    def moves(self, state, symbol, top):
        return self._table.get((state, symbol, top), ())


def _apply(stack: tuple, push: tuple) -> tuple:
    # push[0] is the new top, so it goes last
    return stack[:-1] + push[::-1]


class Dpda(_Pda):
    def _validate(self, max_push) -> None:
        super()._validate(max_push)
        keys: dict = {}
        for r in self.rules:
            k = (r.state, r.symbol, r.top)
            if k in keys:
                raise NondeterminismError(f"two rules for {k}")
            keys[k] = r
        for (q, a, top) in keys:
            if a is EPS and any(b is not EPS for (p, b, t) in keys if p == q and t == top):
                raise NondeterminismError(f"state {q!r} with top {top!r} has both epsilon and input rules")

    # incremental interface; a configuration is (state, stack) or None when dead
    def _eps(self, config, trace: list | None):
        q, stack = config
        limit = len(stack) + len(self.states)
        steps = 0
        while stack:
            mv = self.moves(q, EPS, stack[-1])
            if not mv:
                break
            if trace is not None and q in self.accepting:
                trace.append(True)
            steps += 1
            if steps > limit:
                raise StackBoundError(f"epsilon loop from state {config[0]!r}")
            q, push = mv[0]
            stack = _apply(stack, push)
        if trace is not None and q in self.accepting:
            trace.append(True)
        return q, stack

    def start(self):
        return (self.initial, self.initial_stack)

    def step(self, config, symbol):
        if config is None:
            return None
        q, stack = self._eps(config, None)
        if not stack:
            return None
        mv = self.moves(q, symbol, stack[-1])
        if not mv:
            return None
        p, push = mv[0]
        return (p, _apply(stack, push))

    def is_accepting(self, config) -> bool:
        if config is None:
            return False
        trace: list = []
        self._eps(config, trace)
        return bool(trace)

    def run(self, word: Sequence) -> tuple[bool, str]:
        """Acceptance plus a short diagnostic."""
        config = self.start()
        try:
            for i, a in enumerate(word):
                config = self.step(config, a)
                if config is None:
                    return False, f"no move on symbol {i + 1} ({a!r})"
            ok = self.is_accepting(config)
        except StackBoundError as exc:
            return False, str(exc)
        return ok, "accepted" if ok else f"ended in non-accepting state {config[0]!r}"

    def accepts(self, word: Sequence) -> bool:
        return self.run(word)[0]


class Npda(_Pda):
    """Nondeterministic PDA; pushes are at most two symbols."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("max_push", 2)
        super().__init__(*args, **kwargs)

    def closure(self, configs: Iterable, cap: int) -> frozenset:
        seen = set(configs)
        todo = list(seen)
        while todo:
            q, stack = todo.pop()
            if not stack:
                continue
            for p, push in self.moves(q, EPS, stack[-1]):
                c = (p, _apply(stack, push))
                if len(c[1]) > cap:
                    raise StackBoundError(f"stack height exceeded {cap}")
                if c not in seen:
                    seen.add(c)
                    todo.append(c)
        return frozenset(seen)

    def start(self, cap: int) -> frozenset:
        return self.closure({(self.initial, self.initial_stack)}, cap)

    def step(self, configs: frozenset, symbol, cap: int) -> frozenset:
        nxt = set()
        for q, stack in configs:
            if not stack:
                continue
            for p, push in self.moves(q, symbol, stack[-1]):
                new = _apply(stack, push)
                if len(new) > cap:
                    raise StackBoundError(f"stack height exceeded {cap}")
                nxt.add((p, new))
        return self.closure(nxt, cap)

    def is_accepting(self, configs: frozenset) -> bool:
        return any(q in self.accepting for q, _s in configs)

    def stack_cap(self, length: int) -> int:
        return length + len(self.states) + 2

    def accepts(self, word: Sequence) -> bool:
        cap = self.stack_cap(len(word))
        configs = self.start(cap)
        for a in word:
            if not configs:
                return False
            configs = self.step(configs, a, cap)
        return self.is_accepting(configs)


def dpda_run(machine: Dpda, word: Sequence) -> bool:
    return machine.accepts(word)


def npda_accepts(machine: Npda, word: Sequence) -> bool:
    return machine.accepts(word)


def as_npda(machine: Dpda) -> Npda:
    return Npda(machine.states, machine.alphabet, machine.stack_alphabet, machine.bottom,
                machine.rules, machine.initial, machine.accepting, machine.initial_stack,
                max_push=None)

"""The Immerman language, the set A of successor violations, and the
decomposition of the complement of L_I into seven pieces.

Words are strings over ``0``, ``1`` and the separator ``a``.  A *block* is a
maximal run of bits, so ``w.split("a")`` lists the blocks of ``w`` (possibly
empty ones).  Two blocks are adjacent when exactly one ``a`` separates them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..automata.nfa import Nfa, determinize, relabel
from ..automata.pda import Npda
from .windows import FORBIDDEN_WINDOWS

SIGMA = ("0", "1", "a")
BITS = ("0", "1")
BOTTOM = "⊥"


def blocks(w: str) -> list[str]:
    return w.split("a")


def immerman_member(w: str) -> bool:
    """w = x_1 a x_2 a ... a x_{2^n} listing 0^n, ..., 1^n in increasing order."""
    bs = blocks(w)
    n = len(bs[0])
    if n == 0 or len(bs) != 1 << n:
        return False
    for i, b in enumerate(bs):
        if len(b) != n or set(b) - set(BITS) or int(b, 2) != i:
            return False
    return True


def _violates(u: str, v: str) -> bool:
    n = len(u)
    return n == len(v) and n >= 1 and (int(u, 2) + 1) % (1 << n) != int(v, 2)


def in_A(w: str) -> bool:
    """Some block u and the block v right after it have equal length >= 1
    and <u> + 1 != <v> (mod 2^|u|)."""
    if set(w) - set(SIGMA):
        return False
    bs = blocks(w)
    return any(_violates(u, v) for u, v in zip(bs, bs[1:]))


def modified_immerman_member(w: str) -> bool:
    """Like L_I, but every block at an even (1-based) index is written reversed."""
    bs = blocks(w)
    n = len(bs[0])
    if n == 0 or len(bs) != 1 << n:
        return False
    for j, b in enumerate(bs, 1):
        want = format(j - 1, f"0{n}b")
        if j % 2 == 0:
            want = want[::-1]
        if b != want:
            return False
    return True


# --- pushdown machines -------------------------------------------------------

def _block_skipper(rules: list) -> None:
    """``s0`` sits at a block start; ``sk`` is inside a block being skipped."""
    for top in (BOTTOM,):
        rules.append(("s0", "a", top, "s0", (top,)))
        for b in BITS:
            rules.append(("s0", b, top, "sk", (top,)))
            rules.append(("sk", b, top, "sk", (top,)))
        rules.append(("sk", "a", top, "s0", (top,)))


def _tail(rules: list, tops) -> None:
    """``tail``: the chosen block just ended, so only ``a`` or the end may follow."""
    for top in tops:
        rules.append(("tail", "a", top, "rest", (top,)))
        for c in SIGMA:
            rules.append(("rest", c, top, "rest", (top,)))


def npda_for_A() -> Npda:
    """Nondeterministic PDA for successor violations between adjacent blocks.

    Branch L: the two blocks have equal length (push on u, pop on v) and the
    same last bit.  Branch W: u = p w s and v = p' w' s' where w, w' are two
    bits forming a forbidden window w w'; the stack enforces
    |s| + |p'| = |p| + |s'|.  Together with |u| = |v| this puts the two
    windows at the same bit index.

    On pairs of adjacent blocks of equal length the machine accepts exactly
    the violations.  It also accepts some words whose chosen blocks differ in
    length (for instance ``00a0100``); those still lie outside L_I.
    """
    X, P, M = "X", "P", "M"
    rules: list = []
    _block_skipper(rules)
    states = {"s0", "sk", "tail", "rest"}
    b0 = BOTTOM

    # branch L ---------------------------------------------------------------
    for b in BITS:
        rules.append(("s0", b, b0, f"Lu{b}", (X, b0)))
        states.add(f"Lu{b}")
        for c in BITS:
            rules.append((f"Lu{b}", c, X, f"Lu{c}", (X, X)))
        rules.append((f"Lu{b}", "a", X, f"Lm{b}", (X,)))
        states.add(f"Lm{b}")
        for c in BITS:
            rules.append((f"Lm{b}", c, X, f"Lv{b}{c}", ()))
            states.add(f"Lv{b}{c}")
            for d in BITS:
                rules.append((f"Lv{b}{c}", d, X, f"Lv{b}{d}", ()))
        # u and v ended on the same bit and the counter is empty
        rules.append((f"Lv{b}{b}", None, b0, "tail", (b0,)))

    # branch W ---------------------------------------------------------------
    states |= {"Wp", "Wt"}
    for b in BITS:
        # p: one P per bit before the window of u
        rules.append(("s0", b, b0, "Wp", (P, b0)))
        rules.append(("Wp", b, P, "Wp", (P, P)))
        # high bit of the window of u
        rules.append(("s0", b, b0, f"Ww{b}", (b0,)))
        rules.append(("Wp", b, P, f"Ww{b}", (P,)))
        states.add(f"Ww{b}")
    for hi in BITS:
        for lo in BITS:
            wu = hi + lo
            for top in (b0, P):
                rules.append((f"Ww{hi}", lo, top, f"Wm0_{wu}", (top,)))
            for phase in ("0", "1"):
                st = f"Wm{phase}_{wu}"
                states.add(st)
                for c in BITS:
                    # the middle stretch s a p': cancel p first, then count up
                    rules.append((st, c, P, st, ()))
                    rules.append((st, c, b0, st, (M, b0)))
                    rules.append((st, c, M, st, (M, M)))
            for top in (b0, P, M):
                rules.append((f"Wm0_{wu}", "a", top, f"Wm1_{wu}", (top,)))
            for c in BITS:
                st = f"Wv_{wu}{c}"
                states.add(st)
                for top in (b0, P, M):
                    rules.append((f"Wm1_{wu}", c, top, st, (top,)))
                for d in BITS:
                    if wu + c + d in FORBIDDEN_WINDOWS:
                        for top in (b0, P, M):
                            rules.append((st, d, top, "Wt", (top,)))
    for c in BITS:
        rules.append(("Wt", c, M, "Wt", ()))
    rules.append(("Wt", None, b0, "tail", (b0,)))
    _tail(rules, (b0,))
    return Npda(states, SIGMA, (b0, X, P, M), b0, rules, "s0", {"tail", "rest"})


def unequal_blocks_npda() -> Npda:
    """Words with two adjacent blocks of different lengths (either may be empty)."""
    X = "X"
    b0 = BOTTOM
    rules: list = []
    _block_skipper(rules)
    states = {"s0", "sk", "tail", "rest", "Uu", "Um", "Uv"}
    # u starts here: count its bits
    rules.append(("s0", "a", b0, "Um", (b0,)))
    for b in BITS:
        rules.append(("s0", b, b0, "Uu", (X, b0)))
        rules.append(("Uu", b, X, "Uu", (X, X)))
    rules.append(("Uu", "a", X, "Um", (X,)))
    for st in ("Um", "Uv"):
        for b in BITS:
            rules.append((st, b, X, "Uv", ()))
            # v is longer than u: the rest of the word is irrelevant
            rules.append((st, b, b0, "rest", (b0,)))
        # v stops while u still has unmatched bits
        rules.append((st, None, X, "tail", (X,)))
    _tail(rules, (b0, X))
    return Npda(states, SIGMA, (b0, X), b0, rules, "s0", {"tail", "rest"})


# --- regular pieces ----------------------------------------------------------

def _nfa(trans: dict, initial, accepting) -> Nfa:
    states = {q for q, _a in trans} | {p for ps in trans.values() for p in ps}
    return Nfa(states, SIGMA, trans, initial, accepting)


def regular_components() -> dict[str, Nfa]:
    """The five regular pieces, keyed by a readable pattern."""
    any_ = {("p", c): {"p"} for c in SIGMA}
    return {
        "a*": _nfa({("p", "a"): {"p"}}, {"p"}, {"p"}),
        "S*a0*aS*": _nfa({**any_, ("p", "a"): {"p", "q"}, ("q", "0"): {"q"}, ("q", "a"): {"r"},
                           **{("r", c): {"r"} for c in SIGMA}}, {"p"}, {"r"}),
        "S*a1*aS*": _nfa({**any_, ("p", "a"): {"p", "q"}, ("q", "1"): {"q"}, ("q", "a"): {"r"},
                           **{("r", c): {"r"} for c in SIGMA}}, {"p"}, {"r"}),
        "{0,1}*1S*": _nfa({("p", "0"): {"p"}, ("p", "1"): {"p", "r"},
                           **{("r", c): {"r"} for c in SIGMA}}, {"p"}, {"r"}),
        "S*0{0,1}*": _nfa({**any_, ("p", "0"): {"p", "r"}, ("r", "0"): {"r"}, ("r", "1"): {"r"}},
                          {"p"}, {"r"}),
    }


# --- incremental runners -----------------------------------------------------

class DfaRunner:
    """Step a determinized automaton through a word one symbol at a time."""

    def __init__(self, nfa: Nfa):
        dfa = relabel(determinize(nfa))
        (self.initial,) = dfa.initial
        self.table = {(q, a): next(iter(ps)) for (q, a), ps in dfa.transitions.items()}
        self.final = dfa.accepting

    def start(self):
        return self.initial

    def step(self, q, a):
        return self.table[(q, a)]

    def accepting(self, q) -> bool:
        return q in self.final


class NpdaRunner:
    """Configuration-set stepping with memoized transitions."""

    def __init__(self, machine: Npda, max_len: int):
        self.machine = machine
        self.cap = machine.stack_cap(max_len)
        self._memo: dict = {}
        self._acc: dict = {}

    def start(self):
        return self.machine.start(self.cap)

    def step(self, configs, a):
        key = (configs, a)
        out = self._memo.get(key)
        if out is None:
            out = self._memo[key] = self.machine.step(configs, a, self.cap)
        return out

    def accepting(self, configs) -> bool:
        out = self._acc.get(configs)
        if out is None:
            out = self._acc[configs] = self.machine.is_accepting(configs)
        return out


class ARunner:
    """Incremental in_A: state is (previous block or None, current block, caught)."""

    def start(self):
        return (None, "", False)

    def step(self, state, a):
        prev, cur, caught = state
        if a == "a":
            return (cur, "", caught or (prev is not None and _violates(prev, cur)))
        return (prev, cur + a, caught)

    def accepting(self, state) -> bool:
        prev, cur, caught = state
        return caught or (prev is not None and _violates(prev, cur))


@dataclass
class ComplementDecomposition:
    """The seven-piece union claimed to equal the complement of L_I.

    Pieces: A, a*, S*a0*aS*, S*a1*aS*, {0,1}*1S*, S*0{0,1}* and the words
    with two adjacent blocks of unequal length.  The last piece is not
    regular, so it runs on a pushdown automaton.
    """

    max_len: int = 64
    runners: dict = field(init=False)

    def __post_init__(self) -> None:
        self.runners = {"A": ARunner()}
        for name, nfa in regular_components().items():
            self.runners[name] = DfaRunner(nfa)
        self.runners["|u|!=|v|"] = NpdaRunner(unequal_blocks_npda(), self.max_len)

    def start(self) -> tuple:
        return tuple(r.start() for r in self.runners.values())

    def step(self, states: tuple, a: str) -> tuple:
        return tuple(r.step(s, a) for r, s in zip(self.runners.values(), states))

    def accepting(self, states: tuple) -> bool:
        return any(r.accepting(s) for r, s in zip(self.runners.values(), states))

    def pieces(self, w: str) -> list[str]:
        """Names of the pieces containing ``w``."""
        states = self.start()
        for a in w:
            states = self.step(states, a)
        return [name for (name, r), s in zip(self.runners.items(), states) if r.accepting(s)]

    def member(self, w: str) -> bool:
        if len(w) > self.max_len:
            return ComplementDecomposition(len(w)).member(w)
        return bool(self.pieces(w))


_DEFAULT: ComplementDecomposition | None = None


def complement_decomposition_member(w: str) -> bool:
    global _DEFAULT
    if set(w) - set(SIGMA):
        return False
    if _DEFAULT is None:
        _DEFAULT = ComplementDecomposition()
    return _DEFAULT.member(w)


def membership_tester(name: str) -> Callable[[str], bool]:
    return {
        "immerman": immerman_member,
        "A": in_A,
        "immerman-complement": complement_decomposition_member,
        "modified-immerman": modified_immerman_member,
    }[name]

"""Linear and semilinear sets, stratification, and relation transforms."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .logic.formula import (
    FALSE, Equal, Exists, Formula, Less, Not, NumAtom, conj, disj,
)
from .structures import NumRelation, order_type


@dataclass(frozen=True)
class LinearSet:
    """``{base + sum k_j * periods[j] : k_j >= 0}``."""

    base: tuple[int, ...]
    periods: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        base = tuple(int(x) for x in self.base)
        periods = tuple(tuple(int(x) for x in p) for p in self.periods)
        if min(base, default=0) < 0 or any(min(p, default=0) < 0 for p in periods):
            raise ValueError("linear sets take nonnegative vectors")
        if any(len(p) != len(base) for p in periods):
            raise ValueError("period arity differs from the base")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "periods", tuple(p for p in periods if any(p)))

    @property
    def arity(self) -> int:
        return len(self.base)

    def contains(self, t: Sequence[int]) -> bool:
        t = tuple(t)
        if len(t) != self.arity:
            raise ValueError(f"arity {len(t)} does not match {self.arity}")
        rest = tuple(x - b for x, b in zip(t, self.base))
        if min(rest, default=0) < 0:
            return False
        return _solve(rest, self.periods)

    def points(self, limit: int) -> set[tuple[int, ...]]:
        """Every member whose coordinates are all <= limit."""
        out = set()

        def grow(v, j):
            if j == len(self.periods):
                out.add(v)
                return
            p = self.periods[j]
            while max(v, default=0) <= limit:
                grow(v, j + 1)
                v = tuple(a + b for a, b in zip(v, p))

        if max(self.base, default=0) <= limit:
            grow(self.base, 0)
        return out


def _solve(rest: tuple[int, ...], periods: tuple[tuple[int, ...], ...]) -> bool:
    """Whether ``rest`` is a nonnegative combination of ``periods`` (DFS)."""
    if not periods:
        return not any(rest)
    p, others = periods[0], periods[1:]
    # coefficient bound: the period cannot overshoot any coordinate it touches
    top = min(r // x for r, x in zip(rest, p) if x)
    for k in range(top, -1, -1):
        if _solve(tuple(r - k * x for r, x in zip(rest, p)), others):
            return True
    return False


@dataclass(frozen=True)
class SemilinearSet:
    components: tuple[LinearSet, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if len({c.arity for c in comps}) > 1:
            raise ValueError("components have different arities")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: tuple) -> "SemilinearSet":
        """``SemilinearSet.of((base, [p1, p2]), ...)``."""
        return cls(tuple(LinearSet(tuple(b), tuple(map(tuple, ps))) for b, ps in components))

    @property
    def arity(self) -> int | None:
        return self.components[0].arity if self.components else None

    def contains(self, t: Sequence[int]) -> bool:
        return any(c.contains(t) for c in self.components)

    def points(self, limit: int) -> set[tuple[int, ...]]:
        out: set = set()
        for c in self.components:
            out |= c.points(limit)
        return out

    def is_stratified(self) -> bool:
        return all(is_stratified(c.periods) for c in self.components)

    def to_json(self) -> str:
        return json.dumps({"components": [
            {"base": list(c.base), "periods": [list(p) for p in c.periods]} for c in self.components
        ]})

    @classmethod
    def from_json(cls, text: str) -> "SemilinearSet":
        data = json.loads(text)
        return cls(tuple(
            LinearSet(tuple(c["base"]), tuple(tuple(p) for p in c.get("periods", [])))
            for c in data["components"]
        ))


def membership(s: SemilinearSet, t: Sequence[int]) -> bool:
    return s.contains(t)


def is_stratified(periods: Iterable[Sequence[int]]) -> bool:
    """At most two nonzero coordinates per vector, and no crossing pair.

    A crossing is i < j < k < l with x_i, x'_j, x_k, x'_l all nonzero for
    some x, x' in the set (x = x' allowed).
    """
    supports = []
    for p in periods:
        nz = [i for i, v in enumerate(p) if v]
        if len(nz) > 2:
            return False
        supports.append(nz)
    pairs = [s for s in supports if len(s) == 2]
    for (i, k), (j, l) in itertools.product(pairs, repeat=2):
        if i < j < k < l:
            return False
    return True


def sort_transform(tuples: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    """Each tuple becomes its distinct values in ascending order."""
    return {tuple(sorted(set(t))) for t in tuples}


def diff_transform(tuples: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    """``(y_1..y_n) -> (y_1, y_2 - y_1, ..., y_n - y_{n-1})``; needs ascending input."""
    out = set()
    for t in tuples:
        t = tuple(t)
        if any(a >= b for a, b in zip(t, t[1:])):
            raise ValueError(f"tuple {t} is not strictly ascending")
        out.add(tuple(b - a for a, b in zip((0,) + t, t)))
    return out


def prefix_sums(t: Sequence[int]) -> tuple[int, ...]:
    return tuple(itertools.accumulate(t))


def order_types(tuples: Iterable[Sequence[int]]) -> dict[tuple[int, ...], set[tuple[int, ...]]]:
    groups: dict = {}
    for t in tuples:
        t = tuple(t)
        groups.setdefault(order_type(t), set()).add(t)
    return groups


@dataclass(frozen=True)
class ExponentRelation:
    words: tuple
    tuples: frozenset
    cap: int

    def __contains__(self, t) -> bool:
        return tuple(t) in self.tuples


def exponent_relation(member: Callable, words: Sequence, cap: int) -> ExponentRelation:
    """``{e : every e_i <= cap and w_1^e_1 ... w_n^e_n is accepted}``."""
    words = tuple(words)
    if any(len(w) == 0 for w in words):
        raise ValueError("words must be nonempty")
    if cap < 0:
        raise ValueError("cap must be >= 0")
    found = set()
    for e in itertools.product(range(cap + 1), repeat=len(words)):
        parts = [w * k for w, k in zip(words, e)]
        word = "".join(parts) if all(isinstance(w, str) for w in words) else tuple(
            itertools.chain.from_iterable(parts))
        if member(word):
            found.add(e)
    return ExponentRelation(words, frozenset(found), cap)


def folin_vars(n: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(1, n + 1))


def _sum_equals(terms: list[str], target: str, fresh) -> Formula:
    """``terms[0] + ... + terms[-1] = target`` with chained ternary plus."""
    if not terms:
        return FALSE  # positions are >= 1, so no target equals the empty sum
    if len(terms) == 1:
        return Equal(target, terms[0])

    def chain(acc: str, rest: list[str]) -> Formula:
        if len(rest) == 1:
            return NumAtom("plus", (acc, rest[0], target))
        s = fresh()
        return Exists(s, conj([NumAtom("plus", (acc, rest[0], s)), chain(s, rest[1:])]))

    return chain(terms[0], terms[1:])


def emit_folin(s: SemilinearSet) -> Formula:
    """FO[+] formula in e1..en defining the members of ``s`` with positive entries.

    Coefficients range over N_0 while positions start at 1, so each
    component becomes a disjunction over which periods are used: a used
    period gets an existential coefficient a_j >= 1, an unused one is left
    out.  The constant 1 is the variable ``one``, pinned by
    ``!exists y. y < one``.
    """
    n = s.arity
    if n is None:
        return FALSE
    targets = folin_vars(n)
    counter = itertools.count(1)

    def fresh() -> str:
        return f"s{next(counter)}"

    branches = []
    for comp in s.components:
        for used in itertools.product((False, True), repeat=len(comp.periods)):
            coeffs = [f"a{j + 1}" for j, u in enumerate(used) if u]
            periods = [p for p, u in zip(comp.periods, used) if u]
            equations = []
            for k, target in enumerate(targets):
                terms = ["one"] * comp.base[k]
                for a, p in zip(coeffs, periods):
                    terms += [a] * p[k]
                equations.append(_sum_equals(terms, target, fresh))
            body = conj(equations)
            for a in reversed(coeffs):
                body = Exists(a, body)
            one_def = Not(Exists("y", Less("y", "one")))
            branches.append(Exists("one", conj([one_def, body])))
    return disj(branches)


class PartitionError(ValueError):
    pass


def _compositions(k: int, total: int):
    """Vectors of length k with nonnegative entries summing to at most ``total``."""
    if k == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(k - 1, total - first):
            yield (first,) + rest


def check_cflN_criterion(
    relation: NumRelation,
    partition: Sequence[NumRelation],
    witnesses: Sequence[SemilinearSet],
) -> bool:
    """Check candidate witnesses that each ``diff(sort(R_i))`` is stratified semilinear.

    True iff every witness is stratified and, up to the relation's bound,
    agrees exactly with ``diff(sort(R_i))``: points are compared while their
    prefix sums (the sorted values they encode) stay within the bound.
    """
    if len(partition) != len(witnesses):
        raise PartitionError("need one witness per part")
    union: set = set()
    for part in partition:
        union |= set(part.tuples)
    if union != set(relation.tuples):
        raise PartitionError("the parts do not union to the relation")
    bound = relation.bound
    for part, witness in zip(partition, witnesses):
        if not witness.is_stratified():
            return False
        target = diff_transform(sort_transform(part.tuples))
        if not target and not witness.components:
            continue
        arities = {len(t) for t in target}
        if witness.arity is not None:
            arities.add(witness.arity)
        if len(arities) != 1:
            return False
        (k,) = arities
        if not all(witness.contains(t) for t in target):
            return False
        for x in _compositions(k, bound):
            if witness.contains(x) and x not in target:
                return False
    return True

"""Evaluation of formulas on finite word structures.

Formulas are compiled once into nested closures over a slot array, so that
model checking the same formula on many words (or many assignments) does not
re-walk the AST.  Existential quantifiers whose body pins the bound variable
to a single value (``exists y. y = x & ...``, ``exists s. plus(a, b, s) &
...`` with ``a`` and ``b`` already bound, ``!exists y. y < o``) are narrowed to
that value instead of scanning the universe; the result is unchanged because
every other candidate falsifies a conjunct.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .formula import (
    And, Const, Equal, Exists, Forall, Formula, Iff, Implies, Less, LetterAt,
    Lindstrom, Majority, ModExists, Not, NumAtom, Or, free_vars, has_letters,
)
from .predicates import DEFAULT_REGISTRY, PLUS, NumericalPredicateRegistry


class UnassignedVariableError(ValueError):
    pass


class LetterAtomError(ValueError):
    """A letter atom showed up where only numerical atoms are allowed."""


class LindstromArityError(ValueError):
    pass


_BLANK = "_"


@dataclass(frozen=True)
class WordStructure:
    """The word ``w`` viewed as a structure on positions ``1..len(w)``."""

    alphabet: tuple
    word: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "word", tuple(self.word))
        allowed = set(self.alphabet)
        for i, s in enumerate(self.word, 1):
            if s not in allowed:
                raise ValueError(f"symbol {s!r} at position {i} is not in the alphabet")

    @property
    def m(self) -> int:
        return len(self.word)

    @classmethod
    def blank(cls, m: int) -> "WordStructure":
        """Letter-free structure ``<{1..m}, <, =>`` (one dummy letter)."""
        return cls((_BLANK,), (_BLANK,) * m)


@dataclass(frozen=True)
class Language:
    """A named membership tester used by Lindstrom quantifiers.

    ``member`` receives the word as a tuple of symbols from ``alphabet``.
    The alphabet order fixes which formula produces which letter.
    """

    name: str
    alphabet: tuple
    member: Callable[[tuple], bool] = field(compare=False)

    @classmethod
    def of_strings(cls, name: str, alphabet: str, member: Callable[[str], bool]) -> "Language":
        return cls(name, tuple(alphabet), lambda word: member("".join(word)))


# compiled node: (word, m, env) -> bool
_Fn = Callable[[tuple, int, list], bool]


def _conjuncts(phi: Formula) -> list[Formula]:
    if isinstance(phi, And):
        return _conjuncts(phi.left) + _conjuncts(phi.right)
    return [phi]


def _pin(var: str, body: Formula, slots: Mapping[str, int]):
    """Return ``env -> candidate`` if a conjunct of ``body`` forces ``var``."""
    for c in _conjuncts(body):
        if isinstance(c, Equal) and c.left != c.right:
            other = c.right if c.left == var else c.left if c.right == var else None
            if other is not None and other in slots:
                k = slots[other]
                return lambda env, k=k: env[k]
        if isinstance(c, NumAtom) and c.name == "plus" and c.args.count(var) == 1:
            a, b, s = c.args
            rest = [x for x in c.args if x != var]
            if all(x in slots for x in rest):
                if s == var:
                    ia, ib = slots[a], slots[b]
                    return lambda env, ia=ia, ib=ib: env[ia] + env[ib]
                known = slots[b] if a == var else slots[a]
                total = slots[s]
                return lambda env, known=known, total=total: env[total] - env[known]
        if (isinstance(c, Not) and isinstance(c.body, Exists)
                and isinstance(c.body.body, Less)
                and c.body.body.left == c.body.var and c.body.body.right == var
                and c.body.var != var):
            return lambda env: 1
    return None


class _Compiler:
    def __init__(self, registry: NumericalPredicateRegistry, languages: Mapping[str, Language]):
        self.registry = registry
        self.languages = languages
        self.width = 0

    def slot(self, slots: dict, var: str) -> tuple[dict, int]:
        k = self.width
        self.width += 1
        inner = dict(slots)
        inner[var] = k
        return inner, k

    def var(self, slots, name: str) -> int:
        try:
            return slots[name]
        except KeyError:
            raise UnassignedVariableError(f"variable {name!r} is not assigned") from None

    def compile(self, phi: Formula, slots: dict) -> _Fn:
        if isinstance(phi, Const):
            v = phi.value
            return lambda w, m, env: v
        if isinstance(phi, LetterAt):
            k, letter = self.var(slots, phi.var), phi.letter
            return lambda w, m, env: w[env[k] - 1] == letter
        if isinstance(phi, Less):
            a, b = self.var(slots, phi.left), self.var(slots, phi.right)
            return lambda w, m, env: env[a] < env[b]
        if isinstance(phi, Equal):
            a, b = self.var(slots, phi.left), self.var(slots, phi.right)
            return lambda w, m, env: env[a] == env[b]
        if isinstance(phi, NumAtom):
            pred = self.registry.check_arity(phi.name, len(phi.args))
            ks = [self.var(slots, a) for a in phi.args]
            if pred is PLUS:
                a, b, c = ks
                return lambda w, m, env: env[a] + env[b] == env[c]
            ev = pred.evaluate
            return lambda w, m, env: ev(tuple(env[k] for k in ks), m)
        if isinstance(phi, Not):
            f = self.compile(phi.body, slots)
            return lambda w, m, env: not f(w, m, env)
        if isinstance(phi, And):
            f, g = self.compile(phi.left, slots), self.compile(phi.right, slots)
            return lambda w, m, env: f(w, m, env) and g(w, m, env)
        if isinstance(phi, Or):
            f, g = self.compile(phi.left, slots), self.compile(phi.right, slots)
            return lambda w, m, env: f(w, m, env) or g(w, m, env)
        if isinstance(phi, Implies):
            f, g = self.compile(phi.left, slots), self.compile(phi.right, slots)
            return lambda w, m, env: (not f(w, m, env)) or g(w, m, env)
        if isinstance(phi, Iff):
            f, g = self.compile(phi.left, slots), self.compile(phi.right, slots)
            return lambda w, m, env: f(w, m, env) == g(w, m, env)
        if isinstance(phi, Exists):
            return self._exists(phi.var, phi.body, slots)
        if isinstance(phi, Forall):
            if isinstance(phi.body, Implies):
                # forall v. (guard -> rest)  ==  !exists v. (guard & !rest)
                inner = self._exists(phi.var, And(phi.body.left, Not(phi.body.right)), slots)
            else:
                inner = self._exists(phi.var, Not(phi.body), slots)
            return lambda w, m, env: not inner(w, m, env)
        if isinstance(phi, ModExists):
            inner, k = self.slot(slots, phi.var)
            f = self.compile(phi.body, inner)
            q, r = phi.q, phi.r

            def modexists(w, m, env):
                count = 0
                for c in range(1, m + 1):
                    env[k] = c
                    if f(w, m, env):
                        count += 1
                return count % q == r
            return modexists
        if isinstance(phi, Majority):
            inner, k = self.slot(slots, phi.var)
            f = self.compile(phi.body, inner)

            def majority(w, m, env):
                count = 0
                for c in range(1, m + 1):
                    env[k] = c
                    if f(w, m, env):
                        count += 1
                return 2 * count > m
            return majority
        if isinstance(phi, Lindstrom):
            return self._lindstrom(phi, slots)
        raise TypeError(f"not a formula: {phi!r}")

    def _exists(self, var: str, body: Formula, slots: dict) -> _Fn:
        pin = _pin(var, body, slots)
        inner, k = self.slot(slots, var)
        f = self.compile(body, inner)
        if pin is not None:
            def exists_pinned(w, m, env):
                c = pin(env)
                if not 1 <= c <= m:
                    return False
                env[k] = c
                return f(w, m, env)
            return exists_pinned

        def exists(w, m, env):
            for c in range(1, m + 1):
                env[k] = c
                if f(w, m, env):
                    return True
            return False
        return exists

    def _lindstrom(self, phi: Lindstrom, slots: dict) -> _Fn:
        try:
            lang = self.languages[phi.language]
        except KeyError:
            raise KeyError(f"unknown language {phi.language!r}") from None
        delta = lang.alphabet
        if len(phi.bodies) != len(delta) - 1:
            raise LindstromArityError(
                f"language {lang.name!r} has {len(delta)} letters, so it needs "
                f"{len(delta) - 1} formulas, got {len(phi.bodies)}"
            )
        inner, k = self.slot(slots, phi.var)
        fs = [self.compile(b, inner) for b in phi.bodies]
        cases = list(zip(fs, delta))
        default = delta[-1]
        member = lang.member

        def lindstrom(w, m, env):
            out = []
            for c in range(1, m + 1):
                env[k] = c
                for f, letter in cases:
                    if f(w, m, env):
                        out.append(letter)
                        break
                else:
                    out.append(default)
            return bool(member(tuple(out)))
        return lindstrom


@dataclass(frozen=True)
class Compiled:
    """A formula compiled for a fixed ordered list of free variables."""

    formula: Formula
    variables: tuple[str, ...]
    _fn: _Fn = field(compare=False, repr=False)
    _width: int = field(compare=False, repr=False)

    def __call__(self, word: Sequence, values: Sequence[int] = ()) -> bool:
        env = [0] * self._width
        m = len(word)
        for i, c in enumerate(values):
            if not 1 <= c <= m:
                raise ValueError(f"position {c} outside 1..{m}")
            env[i] = c
        return self._fn(tuple(word), m, env)


def compile_formula(
    phi: Formula,
    variables: Sequence[str] = (),
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
    languages: Mapping[str, Language] | None = None,
) -> Compiled:
    variables = tuple(variables)
    missing = free_vars(phi) - set(variables)
    if missing:
        raise UnassignedVariableError(f"unassigned free variables: {sorted(missing)}")
    comp = _Compiler(registry, languages or {})
    comp.width = len(variables)
    fn = comp.compile(phi, {v: i for i, v in enumerate(variables)})
    return Compiled(phi, variables, fn, max(comp.width, 1))


def evaluate(
    phi: Formula,
    structure: WordStructure,
    assignment: Mapping[str, int] | None = None,
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
    languages: Mapping[str, Language] | None = None,
) -> bool:
    """Truth value of ``phi`` on ``structure`` under ``assignment``."""
    assignment = dict(assignment or {})
    names = tuple(assignment)
    compiled = compile_formula(phi, names, registry, languages)
    return compiled(structure.word, [assignment[v] for v in names])


def eval_lindstrom(
    language: Language,
    formulas: Sequence[Formula],
    structure: WordStructure,
    assignment: Mapping[str, int] | None,
    var: str,
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
    languages: Mapping[str, Language] | None = None,
) -> bool:
    """Apply the first-match transformation and test membership of the result."""
    table = dict(languages or {})
    table[language.name] = language
    phi = Lindstrom(language.name, var, tuple(formulas))
    return evaluate(phi, structure, assignment, registry, table)


def apply_transformation(
    formulas: Sequence[Formula],
    delta: Sequence,
    structure: WordStructure,
    assignment: Mapping[str, int] | None,
    var: str,
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
) -> tuple:
    """The word ``[phi_1, ..., phi_{t-1}](structure)`` over ``delta``."""
    delta = tuple(delta)
    if len(formulas) != len(delta) - 1:
        raise LindstromArityError(f"{len(delta)} letters need {len(delta) - 1} formulas")
    assignment = dict(assignment or {})
    names = tuple(assignment) + (var,)
    compiled = [compile_formula(f, names, registry) for f in formulas]
    base = [assignment[v] for v in names[:-1]]
    out = []
    for c in range(1, structure.m + 1):
        for f, letter in zip(compiled, delta):
            if f(structure.word, base + [c]):
                out.append(letter)
                break
        else:
            out.append(delta[-1])
    return tuple(out)


def words(alphabet: Sequence, max_len: int) -> Iterable[tuple]:
    """All words of length <= max_len, by length then lexicographically."""
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def language_of(
    phi: Formula,
    alphabet: Sequence | str,
    max_len: int,
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
    languages: Mapping[str, Language] | None = None,
) -> set:
    """Words of length <= max_len satisfying the sentence ``phi``.

    Words come back as strings when ``alphabet`` is a string, else as tuples.
    """
    compiled = compile_formula(phi, (), registry, languages)
    as_str = isinstance(alphabet, str)
    out = set()
    for w in words(tuple(alphabet), max_len):
        if compiled(w):
            out.add("".join(w) if as_str else w)
    return out


def _letter_free(phi: Formula) -> None:
    if has_letters(phi):
        raise LetterAtomError("relation evaluation needs a formula without letter atoms")


def relation_of(
    phi: Formula,
    variables: Sequence[str],
    bound: int,
    window: int = 4,
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
    languages: Mapping[str, Language] | None = None,
) -> set[tuple[int, ...]]:
    """Tuples with entries <= bound that satisfy ``phi`` on every universe
    size m in [max, max + window].

    The finite window under-approximates "for all sufficiently large m".
    """
    if bound < 1 or window < 0:
        raise ValueError("bound must be >= 1 and window >= 0")
    _letter_free(phi)
    variables = tuple(variables)
    extra = free_vars(phi) - set(variables)
    if extra:
        raise UnassignedVariableError(f"free variables not listed: {sorted(extra)}")
    compiled = compile_formula(phi, variables, registry, languages)
    out = set()
    for t in itertools.product(range(1, bound + 1), repeat=len(variables)):
        top = max(t, default=1)
        if all(compiled((_BLANK,) * m, t) for m in range(top, top + window + 1)):
            out.add(t)
    return out


def window_disagreements(
    phi: Formula,
    variables: Sequence[str],
    bound: int,
    window: int = 4,
    registry: NumericalPredicateRegistry = DEFAULT_REGISTRY,
) -> dict[tuple[int, ...], tuple[bool, ...]]:
    """Tuples whose truth value changes across the window, with the values seen."""
    _letter_free(phi)
    compiled = compile_formula(phi, tuple(variables), registry)
    out = {}
    for t in itertools.product(range(1, bound + 1), repeat=len(variables)):
        top = max(t, default=1)
        seen = tuple(compiled((_BLANK,) * m, t) for m in range(top, top + window + 1))
        if len(set(seen)) > 1:
            out[t] = seen
    return out

"""Formula AST for first-order logic over words.

Nodes are frozen dataclasses so formulas hash, compare structurally and can
be shared between threads.  Variables are plain strings.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class LetterAt:
    """``Q<letter>(var)``: position ``var`` carries ``letter``."""

    letter: str
    var: str


@dataclass(frozen=True)
class NumAtom:
    name: str
    args: tuple[str, ...]


@dataclass(frozen=True)
class Less:
    left: str
    right: str


@dataclass(frozen=True)
class Equal:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class ModExists:
    """True iff the number of witnesses is congruent to ``r`` modulo ``q``."""

    q: int
    r: int
    var: str
    body: "Formula"

    def __post_init__(self) -> None:
        if self.q < 1 or not 0 <= self.r < self.q:
            raise ValueError(f"existsmod needs 0 <= r < q, got q={self.q}, r={self.r}")


@dataclass(frozen=True)
class Majority:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Lindstrom:
    """Unary Lindstrom quantifier over a named language.

    ``bodies`` holds the t-1 formulas of the transformation; the language's
    alphabet (resolved at evaluation time) must have exactly t letters.
    """

    language: str
    var: str
    bodies: tuple["Formula", ...]


Formula = Union[
    Const, LetterAt, NumAtom, Less, Equal, Not, And, Or, Implies, Iff,
    Exists, Forall, ModExists, Majority, Lindstrom,
]

TRUE = Const(True)
FALSE = Const(False)

_BINARY = (And, Or, Implies, Iff)
_QUANT = (Exists, Forall, ModExists, Majority)
_ATOMIC = (Const, LetterAt, NumAtom, Less, Equal)


def conj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return FALSE
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def children(phi: Formula) -> tuple[Formula, ...]:
    if isinstance(phi, _BINARY):
        return (phi.left, phi.right)
    if isinstance(phi, (Not,) + _QUANT):
        return (phi.body,)
    if isinstance(phi, Lindstrom):
        return phi.bodies
    return ()


def subformulas(phi: Formula) -> Iterator[Formula]:
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def free_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Const):
        return frozenset()
    if isinstance(phi, LetterAt):
        return frozenset((phi.var,))
    if isinstance(phi, NumAtom):
        return frozenset(phi.args)
    if isinstance(phi, (Less, Equal)):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, _BINARY):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, _QUANT):
        return free_vars(phi.body) - {phi.var}
    if isinstance(phi, Lindstrom):
        out: frozenset[str] = frozenset()
        for b in phi.bodies:
            out |= free_vars(b)
        return out - {phi.var}
    raise TypeError(f"not a formula: {phi!r}")


def bound_vars(phi: Formula) -> frozenset[str]:
    return frozenset(
        n.var for n in subformulas(phi) if isinstance(n, _QUANT + (Lindstrom,))
    )


def letters(phi: Formula) -> frozenset[str]:
    return frozenset(n.letter for n in subformulas(phi) if isinstance(n, LetterAt))


def has_letters(phi: Formula) -> bool:
    return any(isinstance(n, LetterAt) for n in subformulas(phi))


def to_text(phi: Formula) -> str:
    """Render in the concrete syntax accepted by :func:`parse_formula`."""
    if isinstance(phi, Const):
        return "true" if phi.value else "false"
    if isinstance(phi, LetterAt):
        return f"Q{phi.letter}({phi.var})"
    if isinstance(phi, NumAtom):
        return f"{phi.name}({', '.join(phi.args)})"
    if isinstance(phi, Less):
        return f"{phi.left} < {phi.right}"
    if isinstance(phi, Equal):
        return f"{phi.left} = {phi.right}"
    if isinstance(phi, Not):
        return "!" + _wrapped(phi.body)
    if isinstance(phi, _BINARY):
        op = {And: "&", Or: "|", Implies: "->", Iff: "<->"}[type(phi)]
        return f"{_wrapped(phi.left)} {op} {_wrapped(phi.right)}"
    if isinstance(phi, Exists):
        return f"exists {phi.var}. {to_text(phi.body)}"
    if isinstance(phi, Forall):
        return f"forall {phi.var}. {to_text(phi.body)}"
    if isinstance(phi, ModExists):
        return f"existsmod[{phi.q},{phi.r}] {phi.var}. {to_text(phi.body)}"
    if isinstance(phi, Majority):
        return f"maj {phi.var}. {to_text(phi.body)}"
    if isinstance(phi, Lindstrom):
        inner = "; ".join(to_text(b) for b in phi.bodies)
        return f"lind[{phi.language}] {phi.var}. [{inner}]"
    raise TypeError(f"not a formula: {phi!r}")


def _wrapped(phi: Formula) -> str:
    # atoms other than the infix comparisons bind tighter than any operator
    if isinstance(phi, (Const, LetterAt, NumAtom, Not)):
        return to_text(phi)
    return f"({to_text(phi)})"

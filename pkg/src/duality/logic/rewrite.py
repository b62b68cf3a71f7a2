"""Turning Gamma_n letter predicates into equalities between positions.

A sentence over Gamma_n evaluated on ``encode(c, m)`` says the same thing as
the letter-free formula obtained by replacing each ``P_(0,V)(z)`` with "z is
exactly the positions of the variables in V", read on ``<{1..m}, <, =>`` with
x_1..x_n interpreted as c.
"""
from __future__ import annotations

from ..structures import GammaError, subset_token, symbol_set
from .formula import (
    And, Const, Equal, Exists, Forall, Formula, Iff, Implies, Less, LetterAt,
    Lindstrom, Majority, ModExists, Not, NumAtom, Or, bound_vars, conj, disj,
)


def tuple_vars(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def _letter_to_equalities(letter: str, var: str, n: int) -> Formula:
    try:
        inside = symbol_set(letter)
    except GammaError:
        raise GammaError(f"letter {letter!r} is not a Gamma_{n} symbol") from None
    if max(inside, default=0) > n:
        raise GammaError(f"letter {letter!r} is not a Gamma_{n} symbol")
    parts = []
    for i in range(1, n + 1):
        eq = Equal(var, f"x{i}")
        parts.append(eq if i in inside else Not(eq))
    return conj(parts)


def rewrite_letter_to_equalities(phi: Formula, n: int) -> Formula:
    """Replace every letter atom by the matching conjunction of (in)equalities.

    The result mentions x1..xn free; ``phi`` must not bind those names.
    """
    clash = bound_vars(phi) & set(tuple_vars(n))
    if clash:
        raise ValueError(f"formula binds reserved variables {sorted(clash)}")
    return _rewrite(phi, n)


def _rewrite(phi: Formula, n: int) -> Formula:
    if isinstance(phi, LetterAt):
        return _letter_to_equalities(phi.letter, phi.var, n)
    if isinstance(phi, (Const, NumAtom, Less, Equal)):
        return phi
    if isinstance(phi, Not):
        return Not(_rewrite(phi.body, n))
    if isinstance(phi, (And, Or, Implies, Iff)):
        return type(phi)(_rewrite(phi.left, n), _rewrite(phi.right, n))
    if isinstance(phi, (Exists, Forall, Majority)):
        return type(phi)(phi.var, _rewrite(phi.body, n))
    if isinstance(phi, ModExists):
        return ModExists(phi.q, phi.r, phi.var, _rewrite(phi.body, n))
    if isinstance(phi, Lindstrom):
        return Lindstrom(phi.language, phi.var, tuple(_rewrite(b, n) for b in phi.bodies))
    raise TypeError(f"not a formula: {phi!r}")


def build_chi(n: int, z: str = "z") -> Formula:
    """chi(x1..xn): the word is a unary V_n-structure placing x_i at x_i.

    For each i, the positions whose letter contains x_i are exactly x_i:
    ``forall z. (OR_{V containing x_i} P_V(z)) <-> z = x_i``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = []
    for i in range(1, n + 1):
        carriers = [LetterAt(subset_token(n, mask), z) for mask in range(1, 1 << n) if mask >> (i - 1) & 1]
        parts.append(Forall(z, Iff(disj(carriers), Equal(z, f"x{i}"))))
    return conj(parts)

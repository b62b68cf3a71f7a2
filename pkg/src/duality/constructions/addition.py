"""A deterministic pushdown automaton for x1 + x2 = x3 on unary V_3-structures.

Stack picture for a structure with tuple (a, b, c): one counter symbol is
pushed for each position up to min(a, b), nothing happens between min(a, b)
and max(a, b), and one symbol is popped for each position after max(a, b)
up to and including c.  The stack returns to the bottom exactly when
c - max(a, b) = min(a, b).
"""
from __future__ import annotations

from ..automata.pda import Dpda
from ..logic.semantics import Language
from ..structures import gamma_alphabet

BOTTOM = "⊥"
COUNT = "0"


def addition_dpda() -> Dpda:
    sigma = gamma_alphabet(3)
    b, o = BOTTOM, COUNT
    rules = []
    for top in (b, o):
        rules += [
            # before either summand: count positions
            ("z0", ".", top, "z0", (o, top)),
            ("z0", "x1", top, "zx", (o, top)),
            ("z0", "x2", top, "zy", (o, top)),
            ("z0", "x1+x2", top, "zxy", (o, top)),
            # one summand seen: wait for the other, stack untouched
            ("zx", ".", top, "zx", (top,)),
            ("zx", "x2", top, "zxy", (top,)),
            ("zy", ".", top, "zy", (top,)),
            ("zy", "x1", top, "zxy", (top,)),
        ]
    rules += [
        # both summands seen: pop one counter per position up to x3
        ("zxy", ".", o, "zxy", ()),
        ("zxy", "x3", o, "zz", ()),
        ("zz", None, b, "acc", (b,)),
        ("acc", ".", b, "acc", (b,)),
    ]
    return Dpda(
        {"z0", "zx", "zy", "zxy", "zz", "acc"}, sigma, (b, o), b, rules, "z0", {"acc"},
    )


def addition_language(name: str = "plus3") -> Language:
    """The DPDA's language, with letters ordered (0,V_1), ..., (0,V_7), then (0,{}).

    This is the letter order the tuple transformation of
    :func:`duality.constructions.transforms.build_tuple_transformation` produces.
    """
    machine = addition_dpda()
    sigma = gamma_alphabet(3)
    return Language(name, sigma[1:] + sigma[:1], machine.accepts)

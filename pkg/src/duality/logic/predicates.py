"""Registry of numerical predicates usable as formula atoms."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping

Evaluator = Callable[[tuple[int, ...], int], bool]

_FAMILY_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\[(\d+(?:,\d+)*)\]$")


class UnknownPredicateError(KeyError):
    pass


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class Predicate:
    name: str
    arity: int
    evaluate: Evaluator


@dataclass(frozen=True)
class PredicateFamily:
    """Predicates indexed by integer parameters, written ``name[p1,p2](x)``."""

    name: str
    arity: int
    nparams: int
    build: Callable[..., Evaluator]


class NumericalPredicateRegistry:
    """Name -> predicate lookup.  Treat instances as immutable."""

    def __init__(self, predicates: Mapping[str, Predicate] = (), families: Mapping[str, PredicateFamily] = ()):
        self._predicates = dict(predicates)
        self._families = dict(families)

    def with_predicate(self, name: str, arity: int, evaluate: Evaluator) -> "NumericalPredicateRegistry":
        preds = dict(self._predicates)
        preds[name] = Predicate(name, arity, evaluate)
        return NumericalPredicateRegistry(preds, self._families)

    def with_family(self, name: str, arity: int, nparams: int, build) -> "NumericalPredicateRegistry":
        fams = dict(self._families)
        fams[name] = PredicateFamily(name, arity, nparams, build)
        return NumericalPredicateRegistry(self._predicates, fams)

    def __contains__(self, name: str) -> bool:
        try:
            self.lookup(name)
        except UnknownPredicateError:
            return False
        return True

    def names(self) -> list[str]:
        return sorted(self._predicates) + [f"{n}[...]" for n in sorted(self._families)]

    def lookup(self, name: str) -> Predicate:
        if name in self._predicates:
            return self._predicates[name]
        m = _FAMILY_RE.match(name)
        if m and m.group(1) in self._families:
            fam = self._families[m.group(1)]
            params = tuple(int(p) for p in m.group(2).split(","))
            if len(params) != fam.nparams:
                raise ArityError(f"{fam.name} takes {fam.nparams} parameters, got {len(params)}")
            return Predicate(name, fam.arity, fam.build(*params))
        raise UnknownPredicateError(f"unknown numerical predicate {name!r}")

    def check_arity(self, name: str, nargs: int) -> Predicate:
        pred = self.lookup(name)
        if pred.arity != nargs:
            raise ArityError(f"predicate {name!r} has arity {pred.arity}, got {nargs} arguments")
        return pred


def _plus(args, m):
    x, y, z = args
    return x + y == z


def _times(args, m):
    x, y, z = args
    return x * y == z


def _bit(args, m):
    # bit i of x, counting the least significant bit as bit 0
    x, i = args
    return (x >> i) & 1 == 1


def _modq(q: int, r: int) -> Evaluator:
    if q < 1 or not 0 <= r < q:
        raise ArityError(f"modq needs 0 <= r < q, got q={q}, r={r}")
    return lambda args, m: args[0] % q == r


PLUS = Predicate("plus", 3, _plus)

DEFAULT_REGISTRY = NumericalPredicateRegistry(
    {
        "<": Predicate("<", 2, lambda a, m: a[0] < a[1]),
        "=": Predicate("=", 2, lambda a, m: a[0] == a[1]),
        "plus": PLUS,
        "times": Predicate("times", 3, _times),
        "bit": Predicate("bit", 2, _bit),
        "even": Predicate("even", 1, lambda a, m: a[0] % 2 == 0),
    },
    {"modq": PredicateFamily("modq", 1, 2, _modq)},
)

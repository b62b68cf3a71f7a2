"""Exhaustive equivalence suites with deterministic JSON reports.

Each suite splits its sweep into chunks.  Chunks run in worker processes
when ``DUALITY_THREADS`` (default: the CPU count) is above one; their
results are merged and failures sorted by input, so the report does not
depend on scheduling.
"""
from __future__ import annotations

import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from ..constructions import (
    ComplementDecomposition, NpdaRunner, addition_dpda, addition_language, build_tuple_transformation,
    complement_decomposition_member, immerman_member, npda_for_A, successor_window_check,
)
from ..logic import (
    Lindstrom, NumAtom, WordStructure, compile_formula, parse_formula,
    relation_of, rewrite_letter_to_equalities,
)
from ..semilinear import SemilinearSet, diff_transform, emit_folin, folin_vars, membership, prefix_sums, sort_transform
from ..structures import encode, gamma_alphabet, neutralize_member
from .oracles import (
    immerman_words, linear_points, oracle_in_A, oracle_plus, oracle_successor, unary_structures,
)

MAX_FAILURES = 100


class UnknownSuiteError(KeyError):
    pass


class SuiteParameterError(ValueError):
    pass


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: int
    failures: list = field(default_factory=list)
    failure_count: int = 0
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "cases": self.cases,
            "failures": self.failures,
            "failure_count": self.failure_count,
            "pass": self.passed,
        }
        if timing:
            out["millis"] = self.millis
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing))


def _fail(inp, expected, actual) -> dict:
    return {"input": str(inp), "expected": str(expected), "actual": str(actual)}


def _threads() -> int:
    env = os.environ.get("DUALITY_THREADS")
    cpus = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(int(env), cpus))
        except ValueError:
            pass
    return cpus


def _map(fn, chunks: list) -> list:
    workers = min(_threads(), len(chunks))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, chunks))
    return [fn(c) for c in chunks]


def _prefix_chunks(alphabet: str, max_len: int, depth: int = 2) -> list[tuple[str, bool]]:
    """Chunk the words of length <= max_len by their first ``depth`` symbols.

    A chunk ``(prefix, False)`` covers the prefix and all its extensions; the
    chunk ``("", True)`` covers the words shorter than ``depth``.
    """
    depth = min(depth, max_len)
    chunks = [("", True)] if depth > 0 else [("", False)]
    if depth > 0:
        chunks += [("".join(p), False) for p in itertools.product(alphabet, repeat=depth)]
    return chunks


def _chunk_words(alphabet: str, max_len: int, prefix: str, short: bool, depth: int = 2):
    if short:
        for n in range(min(depth, max_len + 1)):
            for t in itertools.product(alphabet, repeat=n):
                yield "".join(t)
        return
    for n in range(len(prefix), max_len + 1):
        for t in itertools.product(alphabet, repeat=n - len(prefix)):
            yield prefix + "".join(t)


def _trie(runner, alphabet: str, max_len: int, prefix: str, short: bool, visit, depth: int = 2) -> None:
    """Call ``visit(word, accepted)`` on every word of the chunk, stepping the
    runner incrementally along a depth-first walk of the word trie."""
    step, accepting = runner.step, runner.accepting
    if short:
        for w in _chunk_words(alphabet, max_len, prefix, True, depth):
            s = runner.start()
            for a in w:
                s = step(s, a)
            visit(w, accepting(s))
        return
    s = runner.start()
    for a in prefix:
        s = step(s, a)

    def walk(w: str, state) -> None:
        visit(w, accepting(state))
        if len(w) < max_len:
            for a in alphabet:
                walk(w + a, step(state, a))

    if len(prefix) <= max_len:
        walk(prefix, s)


def _merge(name: str, params: dict, results: list, started: float) -> SuiteReport:
    cases = sum(r[0] for r in results)
    failures = sorted((f for r in results for f in r[1]), key=lambda f: (f["input"], f["expected"], f["actual"]))
    return SuiteReport(
        suite=name, params=params, cases=cases, failures=failures[:MAX_FAILURES],
        failure_count=len(failures), millis=int((time.perf_counter() - started) * 1000),
    )


# --- suites ------------------------------------------------------------------

def _successor_chunk(n: int):
    cases, failures = 0, []
    words = ["".join(t) for t in itertools.product("01", repeat=n)]
    for u in words:
        for v in words:
            if u[-1] == v[-1]:
                continue
            cases += 1
            got, want = successor_window_check(u, v), oracle_successor(u, v)
            if got != want:
                failures.append(_fail(f"{u},{v}", want, got))
    return cases, failures


def _suite_successor(p):
    return list(range(1, p["max_n"] + 1)), _successor_chunk


def _addition_chunk(args):
    max_len, = args
    machine = addition_dpda()
    cases, failures = 0, []
    for t, w in unary_structures(3, max_len):
        cases += 1
        got, want = machine.accepts(w), oracle_plus(t)
        if got != want:
            failures.append(_fail(" ".join(w), want, got))
    # every word that is not a structure must be rejected
    sigma = gamma_alphabet(3)
    for n in range(min(max_len, 4) + 1):
        for w in itertools.product(sigma, repeat=n):
            counts = [sum(tok.split("+").count(f"x{i}") for tok in w) for i in (1, 2, 3)]
            if counts == [1, 1, 1]:
                continue
            cases += 1
            if machine.accepts(w):
                failures.append(_fail(" ".join(w), False, True))
    return cases, failures


def _suite_addition(p):
    return [(p["max_len"],)], _addition_chunk


def _complement_chunk(args):
    max_len, prefix, short = args
    runner = ComplementDecomposition(max_len)
    members = immerman_words(max_len)
    out = [0, []]

    def visit(w, accepted):
        out[0] += 1
        if accepted == (w in members):
            out[1].append(_fail(w, w not in members, accepted))

    _trie(runner, "01a", max_len, prefix, short, visit)
    return out[0], out[1]


def _suite_complement(p):
    m = p["max_len"]
    return [(m, pre, short) for pre, short in _prefix_chunks("01a", m)], _complement_chunk


def _npda_chunk(args):
    max_len, prefix, short = args
    runner = NpdaRunner(npda_for_A(), max_len)
    out = [0, []]

    def visit(w, accepted):
        out[0] += 1
        want = oracle_in_A(w)
        if accepted != want:
            out[1].append(_fail(w, want, accepted))

    _trie(runner, "01a", max_len, prefix, short, visit)
    return out[0], out[1]


def _suite_npda(p):
    m = p["max_len"]
    return [(m, pre, short) for pre, short in _prefix_chunks("01a", m)], _npda_chunk


def _neutral_chunk(args):
    max_len, prefix, short = args
    in_li = neutralize_member(lru_cache(maxsize=None)(immerman_member), "e")
    in_co = neutralize_member(lru_cache(maxsize=None)(complement_decomposition_member), "e")
    cases, failures = 0, []
    for w in _chunk_words("01ae", max_len, prefix, short):
        cases += 1
        left, right = in_li(w), not in_co(w)
        if left != right:
            failures.append(_fail(w, left, right))
    return cases, failures


def _suite_neutral(p):
    m = p["max_len"]
    return [(m, pre, short) for pre, short in _prefix_chunks("01ae", m)], _neutral_chunk


def _lindstrom_chunk(args):
    max_c, window = args
    lang = addition_language("plus3")
    lind = Lindstrom("plus3", "y", tuple(build_tuple_transformation(3)))
    names = ("x1", "x2", "x3")
    quantified = compile_formula(lind, names, languages={"plus3": lang})
    builtin = compile_formula(NumAtom("plus", names), names)
    cases, failures = 0, []
    for t in itertools.product(range(1, max_c + 1), repeat=3):
        top = max(t)
        for m in range(top, top + window + 1):
            cases += 1
            word = WordStructure.blank(m).word
            got, want = quantified(word, t), builtin(word, t)
            if got != want:
                failures.append(_fail(f"{t} m={m}", want, got))
    return cases, failures


def _suite_lindstrom(p):
    return [(p["max_c"], p["window"])], _lindstrom_chunk


def random_semilinear(rng: random.Random) -> SemilinearSet:
    """Arity 1-3, one or two components, up to two periods, entries <= 4."""
    n = rng.randint(1, 3)
    comps = []
    for _ in range(rng.randint(1, 2)):
        base = tuple(rng.randint(0, 4) for _ in range(n))
        periods = [tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(0, 2))]
        comps.append((base, periods))
    return SemilinearSet.of(*comps)


def _folin_chunk(args):
    seed, index, bound = args
    rng = random.Random(f"{seed}:{index}")
    s = random_semilinear(rng)
    n = s.arity
    got = relation_of(emit_folin(s), folin_vars(n), bound)
    oracle = set()
    for c in s.components:
        oracle |= linear_points(c.base, c.periods, bound)
    cases, failures = 0, []
    for t in itertools.product(range(1, bound + 1), repeat=n):
        cases += 1
        want = membership(s, t)
        if want != (t in oracle) or want != (t in got):
            failures.append(_fail(f"{s.to_json()} {t}", want, t in got))
    return cases, failures


def _suite_folin(p):
    return [(p["seed"], i, p["bound"]) for i in range(p["sets"])], _folin_chunk


def _sortdiff_chunk(args):
    arity, bound = args
    cases, failures = 0, []
    for t in itertools.combinations(range(1, bound + 1), arity):
        cases += 1
        (d,) = diff_transform({t})
        if prefix_sums(d) != t:
            failures.append(_fail(t, t, prefix_sums(d)))
    for t in itertools.product(range(1, bound + 1), repeat=arity):
        cases += 1
        (s,) = sort_transform({t})
        (d,) = diff_transform({s})
        if prefix_sums(d) != tuple(sorted(set(t))):
            failures.append(_fail(t, tuple(sorted(set(t))), prefix_sums(d)))
    return cases, failures


def _suite_sortdiff(p):
    return [(k, p["bound"]) for k in range(1, p["max_arity"] + 1)], _sortdiff_chunk


# Sentences over Gamma_2 whose truth on encode(c, m) does not depend on m.
PROP3_SENTENCES: tuple[str, ...] = (
    "exists z. Qx1+x2(z)",
    "exists y. exists z. (Qx1(y) & Qx2(z) & y < z)",
    "forall z. (Qx2(z) -> exists y. (y < z & Qx1(y)))",
    "exists z. ((Qx1(z) | Qx1+x2(z)) & !exists y. y < z)",
    "exists y. exists z. (Qx1(y) & Qx2(z) & exists w. (y < w & w < z))",
    "exists z. (Qx2(z) & forall y. (y < z -> Q.(y)))",
    "forall y. forall z. ((Qx1(y) & Qx2(z)) -> !(z < y))",
    "exists y. ((Qx1(y) | Qx1+x2(y)) & exists z. (z < y & exists w. w < z))",
    "forall z. (Q.(z) | Qx1(z) | Qx2(z) | Qx1+x2(z))",
    "exists y. exists z. (y < z & (Qx1(y) | Qx2(y)) & (Qx1(z) | Qx2(z))"
    " & forall w. ((y < w & w < z) -> Q.(w)))",
)


def _prop3_chunk(args):
    index, max_c, window = args
    phi = parse_formula(PROP3_SENTENCES[index])
    on_letters = compile_formula(phi)
    letter_free = compile_formula(rewrite_letter_to_equalities(phi, 2), ("x1", "x2"))
    cases, failures = 0, []
    for c in itertools.product(range(1, max_c + 1), repeat=2):
        top = max(c)
        seen = []
        for m in range(top, top + window + 1):
            cases += 1
            a = on_letters(encode(c, m))
            b = letter_free(WordStructure.blank(m).word, c)
            seen.append(a)
            if a != b:
                failures.append(_fail(f"#{index} c={c} m={m}", a, b))
        if len(set(seen)) > 1:
            failures.append(_fail(f"#{index} c={c} window", "constant", seen))
    return cases, failures


def _suite_prop3(p):
    return [(i, p["max_c"], p["window"]) for i in range(len(PROP3_SENTENCES))], _prop3_chunk


# name -> (builder, defaults, allowed ranges)
SUITES = {
    "successor-windows": (_suite_successor, {"max_n": 10}, {"max_n": (1, 14)}),
    "addition-dpda": (_suite_addition, {"max_len": 12}, {"max_len": (1, 16)}),
    "immerman-complement": (_suite_complement, {"max_len": 14}, {"max_len": (0, 16)}),
    "npda-A": (_suite_npda, {"max_len": 12}, {"max_len": (0, 14)}),
    "neutral-immerman": (_suite_neutral, {"max_len": 12}, {"max_len": (0, 13)}),
    "lindstrom-plus": (_suite_lindstrom, {"max_c": 8, "window": 4}, {"max_c": (1, 10), "window": (0, 6)}),
    "semilinear-folin": (_suite_folin, {"sets": 20, "bound": 12, "seed": 0},
                         {"sets": (1, 200), "bound": (1, 16), "seed": (0, 2**31)}),
    "sort-diff": (_suite_sortdiff, {"max_arity": 4, "bound": 10}, {"max_arity": (1, 5), "bound": (1, 12)}),
    "prop3-rewrite": (_suite_prop3, {"max_c": 6, "window": 4}, {"max_c": (1, 8), "window": (0, 6)}),
}


def run_suite(name: str, params: dict | None = None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    build, defaults, ranges = SUITES[name]
    merged = dict(defaults)
    for key, value in (params or {}).items():
        if value is None:
            continue
        if key not in defaults:
            raise SuiteParameterError(f"suite {name!r} has no parameter {key!r}")
        merged[key] = int(value)
    for key, (lo, hi) in ranges.items():
        if not lo <= merged[key] <= hi:
            raise SuiteParameterError(f"{key}={merged[key]} outside the supported range [{lo}, {hi}]")
    started = time.perf_counter()
    chunks, fn = build(merged)
    return _merge(name, merged, _map(fn, chunks), started)

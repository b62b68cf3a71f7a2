"""Command-line interface.

Exit status: 0 for true/pass, 1 for false/fail, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from ..constructions import (
    addition_dpda, complement_decomposition_member, immerman_member, in_A,
    modified_immerman_member, wotschke_member,
)
from ..logic import (
    ArityError, FormulaSyntaxError, UnassignedVariableError, UnknownPredicateError,
    LetterAtomError, WordStructure, evaluate, free_vars, parse_formula, relation_of,
)
from ..semilinear import is_stratified
from ..structures import (
    GammaError, encode, format_word, parse_word, relation_of_language, symbol_set, tuple_of,
)
from .suites import SUITES, SuiteParameterError, run_suite


class UsageError(Exception):
    pass


LANGUAGES = {
    "immerman": immerman_member,
    "immerman-complement": complement_decomposition_member,
    "A": in_A,
    "modified-immerman": modified_immerman_member,
    "wotschke": wotschke_member,
}


def _bool(value: bool) -> int:
    print("true" if value else "false")
    return 0 if value else 1


def _parse_assign(text: str | None) -> dict[str, int]:
    out: dict[str, int] = {}
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise UsageError(f"bad assignment {part!r}; use name=position")
        name, value = part.split("=", 1)
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"bad position in {part!r}") from None
    return out


def _cmd_eval(args) -> int:
    phi = parse_formula(args.formula)
    tokens = args.tokens or any(c.isspace() for c in args.alphabet)
    alphabet = tuple(args.alphabet.split()) if tokens else tuple(args.alphabet)
    word = tuple(args.word.split()) if tokens else tuple(args.word)
    try:
        structure = WordStructure(alphabet, word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    assignment = _parse_assign(args.assign)
    for name, c in assignment.items():
        if not 1 <= c <= structure.m:
            raise UsageError(f"{name}={c} is outside 1..{structure.m}")
    return _bool(evaluate(phi, structure, assignment))


def _cmd_member(args) -> int:
    if args.lang == "addition":
        return _bool(addition_dpda().accepts(parse_word(args.word)))
    return _bool(LANGUAGES[args.lang](args.word))


def _cmd_relation(args) -> int:
    if args.formula:
        phi = parse_formula(args.formula)
        names = [f"x{i}" for i in range(1, args.arity + 1)]
        extra = free_vars(phi) - set(names)
        if extra:
            raise UsageError(f"free variables must be among x1..x{args.arity}: {sorted(extra)}")
        tuples = sorted(relation_of(phi, names, args.bound, args.window))
    else:
        if args.lang != "addition":
            raise UsageError("only the addition language is over Gamma_n; use --formula otherwise")
        if args.arity != 3:
            raise UsageError("the addition language has arity 3")
        tuples = sorted(relation_of_language(addition_dpda().accepts, 3, args.bound).tuples)
    for t in tuples:
        print(" ".join(map(str, t)))
    return 0


def _cmd_stratified(args) -> int:
    try:
        periods = json.loads(args.periods)
        vectors = [tuple(int(x) for x in p) for p in periods]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--periods must be a JSON list of integer lists: {exc}") from None
    if len({len(v) for v in vectors}) > 1:
        raise UsageError("period vectors must share one arity")
    return _bool(is_stratified(vectors))


def _cmd_verify(args) -> int:
    params = {k: getattr(args, k) for k in
              ("max_n", "max_len", "max_c", "window", "sets", "bound", "seed", "max_arity")}
    defaults = SUITES[args.suite][1]
    unused = [k for k, v in params.items() if v is not None and k not in defaults]
    if unused:
        raise UsageError(f"suite {args.suite!r} does not take {', '.join('--' + k.replace('_', '-') for k in unused)}")
    report = run_suite(args.suite, {k: v for k, v in params.items() if k in defaults})
    if args.json:
        print(report.to_json())
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {report.suite} cases={report.cases} failures={report.failure_count} "
              f"millis={report.millis}")
        for f in report.failures[:10]:
            print(f"  {f['input']}: expected {f['expected']}, got {f['actual']}")
    return 0 if report.passed else 1


def _cmd_encode(args) -> int:
    try:
        t = tuple(int(x) for x in args.tuple.replace(",", " ").split())
    except ValueError:
        raise UsageError("--tuple takes comma-separated positive integers") from None
    print(format_word(encode(t, args.length)))
    return 0


def _cmd_decode(args) -> int:
    word = parse_word(args.word)
    n = args.n if args.n is not None else max((max(symbol_set(t), default=0) for t in word), default=0)
    print(" ".join(map(str, tuple_of(word, n))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="duality", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a formula on a word")
    p.add_argument("--formula", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--alphabet", required=True,
                   help="letters as one string (ab), or whitespace-separated tokens")
    p.add_argument("--tokens", action="store_true", help="read word and alphabet as tokens")
    p.add_argument("--assign", help="free variable positions, e.g. x=3,y=1")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("member", help="test membership in a named language")
    p.add_argument("--lang", required=True, choices=sorted(LANGUAGES) + ["addition"])
    p.add_argument("--word", required=True)
    p.set_defaults(run=_cmd_member)

    p = sub.add_parser("relation", help="list the tuples of a numerical relation")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--lang", choices=["addition"])
    src.add_argument("--formula", help="letter-free formula in x1..xN")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--window", type=int, default=4)
    p.set_defaults(run=_cmd_relation)

    p = sub.add_parser("stratified", help="test a period set for stratification")
    p.add_argument("--periods", required=True, help="JSON list of vectors, e.g. [[1,1,0,0],[0,0,1,1]]")
    p.set_defaults(run=_cmd_stratified)

    p = sub.add_parser("verify", help="run an exhaustive suite")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    for flag in ("max-n", "max-len", "max-c", "window", "sets", "bound", "seed", "max-arity"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("encode", help="tuple to Gamma_n word")
    p.add_argument("--tuple", required=True, help="positions, e.g. 2,3,5")
    p.add_argument("--length", type=int)
    p.set_defaults(run=_cmd_encode)

    p = sub.add_parser("decode", help="Gamma_n word to tuple")
    p.add_argument("--word", required=True, help='e.g. ". x1 x2 . x3"')
    p.add_argument("--n", type=int)
    p.set_defaults(run=_cmd_decode)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, FormulaSyntaxError, UnknownPredicateError, ArityError,
            UnassignedVariableError, LetterAtomError, GammaError, SuiteParameterError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"duality {args.command}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

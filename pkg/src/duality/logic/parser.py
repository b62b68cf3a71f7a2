"""Recursive-descent parser for the formula surface syntax.

Grammar (whitespace-insensitive)::

    formula := quant | iff
    quant   := ("exists" | "forall" | "maj") IDENT "." formula
             | "existsmod" "[" NUM "," NUM "]" IDENT "." formula
             | "lind" "[" NAME "]" IDENT "." "[" formula (";" formula)* "]"
    iff     := imp ("<->" imp)*
    imp     := or ("->" or)*          (right associative)
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | quant | "(" formula ")" | atom
    atom    := "Q" SYMBOL "(" IDENT ")" | IDENT "<" IDENT | IDENT "=" IDENT
             | NAME "(" IDENT ("," IDENT)* ")" | "true" | "false"

A quantifier may also appear in unary position (``!exists i. ...``); its
body then extends as far right as possible.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import (
    And, Const, Equal, Exists, Forall, Formula, Iff, Implies, Less, LetterAt,
    Lindstrom, Majority, ModExists, Not, NumAtom, Or,
)
from .predicates import DEFAULT_REGISTRY, NumericalPredicateRegistry


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text[:pos]}‸{text[pos:]}")
        self.pos = pos


@dataclass(frozen=True)
class _Tok:
    kind: str
    value: str
    pos: int


_KEYWORDS = {"exists", "forall", "maj", "existsmod", "lind", "true", "false"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<letter>Q(?P<sym>[^\s()\[\];,]+?)(?=\())
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><->|->|[()\[\].,;!&|<=])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "sym":
            kind = "letter"
        if kind == "letter":
            toks.append(_Tok("letter", m.group("sym"), pos))
        elif kind == "ident":
            word = m.group()
            toks.append(_Tok("kw" if word in _KEYWORDS else "ident", word, pos))
        elif kind in ("num", "op"):
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, registry: NumericalPredicateRegistry):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.registry = registry

    def peek(self, offset: int = 0) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise FormulaSyntaxError(message, tok.pos, self.text)

    def expect(self, kind: str, value: str | None = None) -> _Tok:
        tok = self.peek()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            got = tok.value or tok.kind
            self.error(f"expected {want!r}, got {got!r}")
        return self.next()

    def at(self, kind: str, value: str | None = None) -> bool:
        tok = self.peek()
        return tok.kind == kind and (value is None or tok.value == value)

    def parse(self) -> Formula:
        phi = self.formula()
        if not self.at("eof"):
            self.error("trailing input")
        return phi

    def formula(self) -> Formula:
        if self.at("kw") and self.peek().value in ("exists", "forall", "maj", "existsmod", "lind"):
            return self.quant()
        return self.iff()

    def quant(self) -> Formula:
        kw = self.next().value
        if kw == "existsmod":
            self.expect("op", "[")
            q = int(self.expect("num").value)
            self.expect("op", ",")
            r_tok = self.expect("num")
            r = int(r_tok.value)
            self.expect("op", "]")
            var = self.expect("ident").value
            self.expect("op", ".")
            if q < 1 or r >= q:
                self.error(f"existsmod needs 0 <= r < q, got q={q}, r={r}", r_tok)
            return ModExists(q, r, var, self.formula())
        if kw == "lind":
            self.expect("op", "[")
            name = self.expect("ident").value
            self.expect("op", "]")
            var = self.expect("ident").value
            self.expect("op", ".")
            self.expect("op", "[")
            bodies = [self.formula()]
            while self.at("op", ";"):
                self.next()
                bodies.append(self.formula())
            self.expect("op", "]")
            return Lindstrom(name, var, tuple(bodies))
        var = self.expect("ident").value
        self.expect("op", ".")
        body = self.formula()
        return {"exists": Exists, "forall": Forall, "maj": Majority}[kw](var, body)

    def iff(self) -> Formula:
        left = self.imp()
        while self.at("op", "<->"):
            self.next()
            left = Iff(left, self.imp())
        return left

    def imp(self) -> Formula:
        left = self.or_()
        if self.at("op", "->"):
            self.next()
            return Implies(left, self.imp())
        return left

    def or_(self) -> Formula:
        left = self.and_()
        while self.at("op", "|"):
            self.next()
            left = Or(left, self.and_())
        return left

    def and_(self) -> Formula:
        left = self.unary()
        while self.at("op", "&"):
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        if self.at("op", "!"):
            self.next()
            return Not(self.unary())
        if self.at("kw") and self.peek().value in ("exists", "forall", "maj", "existsmod", "lind"):
            return self.quant()
        if self.at("op", "("):
            self.next()
            phi = self.formula()
            self.expect("op", ")")
            return phi
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "kw" and tok.value in ("true", "false"):
            self.next()
            return Const(tok.value == "true")
        if tok.kind == "letter":
            self.next()
            self.expect("op", "(")
            var = self.expect("ident").value
            self.expect("op", ")")
            return LetterAt(tok.value, var)
        if tok.kind != "ident":
            self.error("expected an atom")
        nxt = self.peek(1)
        if nxt.kind == "op" and nxt.value in ("<", "="):
            left = self.next().value
            self.next()
            right = self.expect("ident").value
            return (Less if nxt.value == "<" else Equal)(left, right)
        name = self.next().value
        if self.at("op", "["):
            self.next()
            params = [self.expect("num").value]
            while self.at("op", ","):
                self.next()
                params.append(self.expect("num").value)
            self.expect("op", "]")
            name = f"{name}[{','.join(params)}]"
        self.expect("op", "(")
        args = [self.expect("ident").value]
        while self.at("op", ","):
            self.next()
            args.append(self.expect("ident").value)
        self.expect("op", ")")
        # raises UnknownPredicateError / ArityError
        self.registry.check_arity(name, len(args))
        return NumAtom(name, tuple(args))


def parse_formula(text: str, registry: NumericalPredicateRegistry = DEFAULT_REGISTRY) -> Formula:
    """Parse ``text`` into a formula AST.

    Raises :class:`FormulaSyntaxError` on malformed input,
    :class:`~duality.logic.predicates.UnknownPredicateError` for names not in
    ``registry`` and :class:`~duality.logic.predicates.ArityError` when an
    atom has the wrong number of arguments.
    """
    return _Parser(text, registry).parse()

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duality.logic import (
    And, ArityError, Const, Equal, Exists, Forall, FormulaSyntaxError, Iff, Implies, Less,
    LetterAt, Lindstrom, Majority, ModExists, Not, NumAtom, Or, UnknownPredicateError,
    parse_formula, to_text,
)


def test_even_b_sentence():
    phi = parse_formula("!exists i. (even(i) & Qb(i))")
    assert phi == Not(Exists("i", And(NumAtom("even", ("i",)), LetterAt("b", "i"))))


def test_atoms_and_modexists():
    assert parse_formula("x < y") == Less("x", "y")
    assert parse_formula("x = y") == Equal("x", "y")
    assert parse_formula("existsmod[2,0] x. Qa(x)") == ModExists(2, 0, "x", LetterAt("a", "x"))


def test_gamma_letters_and_families():
    assert parse_formula("Qx1+x2(z)") == LetterAt("x1+x2", "z")
    assert parse_formula("Q.(z)") == LetterAt(".", "z")
    assert parse_formula("modq[3,1](x)") == NumAtom("modq[3,1]", ("x",))


def test_precedence():
    phi = parse_formula("a < b | b < c & c < d -> x = y <-> true")
    want = Iff(
        Implies(Or(Less("a", "b"), And(Less("b", "c"), Less("c", "d"))), Equal("x", "y")),
        Const(True),
    )
    assert phi == want
    assert parse_formula("true -> false -> true") == Implies(Const(True), Implies(Const(False), Const(True)))


def test_quantifier_body_extends_right():
    phi = parse_formula("exists x. x < y & y < x")
    assert phi == Exists("x", And(Less("x", "y"), Less("y", "x")))
    phi = parse_formula("true & forall x. x = x | false")
    assert phi == And(Const(True), Forall("x", Or(Equal("x", "x"), Const(False))))


def test_lindstrom_syntax():
    phi = parse_formula("lind[L] y. [y = x; y < x]")
    assert phi == Lindstrom("L", "y", (Equal("y", "x"), Less("y", "x")))


def test_syntax_error_reports_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("exists x x < y")
    assert info.value.pos == 9
    with pytest.raises(FormulaSyntaxError):
        parse_formula("x < y)")
    with pytest.raises(FormulaSyntaxError):
        parse_formula("existsmod[2,2] x. true")


def test_unknown_predicate_and_arity():
    with pytest.raises(UnknownPredicateError):
        parse_formula("prime(x)")
    with pytest.raises(ArityError):
        parse_formula("plus(x, y)")


VARS = st.sampled_from(["x", "y", "z", "i"])
ATOMS = st.one_of(
    st.builds(Const, st.booleans()),
    st.builds(LetterAt, st.sampled_from(["a", "b", ".", "x1+x2"]), VARS),
    st.builds(Less, VARS, VARS),
    st.builds(Equal, VARS, VARS),
    st.builds(lambda v: NumAtom("even", (v,)), VARS),
    st.builds(lambda a, b, c: NumAtom("plus", (a, b, c)), VARS, VARS, VARS),
    st.builds(lambda v: NumAtom("modq[3,2]", (v,)), VARS),
)


def _extend(children):
    return st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
        st.builds(Iff, children, children),
        st.builds(Exists, VARS, children),
        st.builds(Forall, VARS, children),
        st.builds(Majority, VARS, children),
        st.builds(lambda q, r, v, b: ModExists(q, r % q, v, b), st.integers(1, 5), st.integers(0, 4), VARS, children),
        st.builds(lambda v, bs: Lindstrom("L", v, tuple(bs)), VARS, st.lists(children, min_size=1, max_size=3)),
    )


FORMULAS = st.recursive(ATOMS, _extend, max_leaves=12)


@settings(max_examples=400, deadline=None)
@given(FORMULAS)
def test_round_trip(phi):
    assert parse_formula(to_text(phi)) == phi

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duality.logic import (
    And, Const, Equal, Exists, Forall, Iff, Implies, Language, Less, LetterAt,
    LetterAtomError, LindstromArityError, Majority, ModExists, Not, NumAtom, Or,
    UnassignedVariableError, WordStructure, eval_lindstrom, evaluate, language_of,
    parse_formula, relation_of, window_disagreements,
)
from duality.logic.predicates import DEFAULT_REGISTRY


def reference_eval(phi, word, env):
    """Textbook recursive evaluation over positions 1..len(word)."""
    m = len(word)
    rec = lambda f, e=env: reference_eval(f, word, e)  # noqa: E731
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, LetterAt):
        return word[env[phi.var] - 1] == phi.letter
    if isinstance(phi, Less):
        return env[phi.left] < env[phi.right]
    if isinstance(phi, Equal):
        return env[phi.left] == env[phi.right]
    if isinstance(phi, NumAtom):
        args = [env[a] for a in phi.args]
        if phi.name == "plus":
            return args[0] + args[1] == args[2]
        if phi.name == "even":
            return args[0] % 2 == 0
        if phi.name == "bit":
            return (args[0] // 2 ** args[1]) % 2 == 1
        raise AssertionError(phi.name)
    if isinstance(phi, Not):
        return not rec(phi.body)
    if isinstance(phi, And):
        return rec(phi.left) and rec(phi.right)
    if isinstance(phi, Or):
        return rec(phi.left) or rec(phi.right)
    if isinstance(phi, Implies):
        return (not rec(phi.left)) or rec(phi.right)
    if isinstance(phi, Iff):
        return rec(phi.left) == rec(phi.right)
    hits = [rec(phi.body, {**env, phi.var: c}) for c in range(1, m + 1)]
    if isinstance(phi, Exists):
        return any(hits)
    if isinstance(phi, Forall):
        return all(hits)
    if isinstance(phi, ModExists):
        return sum(hits) % phi.q == phi.r
    if isinstance(phi, Majority):
        return sum(hits) > m / 2
    raise AssertionError(phi)


def test_even_b_examples():
    phi = parse_formula("!exists i.(even(i) & Qb(i))")
    assert evaluate(phi, WordStructure("ab", "abab")) is False
    assert evaluate(phi, WordStructure("ab", "ba")) is True
    assert evaluate(parse_formula("forall x. x = x"), WordStructure("ab", "aab")) is True
    assert evaluate(parse_formula("maj x. true"), WordStructure("a", "aaa")) is True


def test_empty_universe():
    empty = WordStructure("a", "")
    assert not evaluate(parse_formula("exists x. true"), empty)
    assert evaluate(parse_formula("forall x. false"), empty)
    assert evaluate(parse_formula("existsmod[3,0] x. true"), empty)
    assert not evaluate(parse_formula("existsmod[3,1] x. true"), empty)
    assert not evaluate(parse_formula("maj x. true"), empty)


def test_majority_is_strict():
    phi = parse_formula("maj x. Qa(x)")
    assert not evaluate(phi, WordStructure("ab", "ab"))
    assert evaluate(phi, WordStructure("ab", "aab"))


def test_unassigned_variable():
    with pytest.raises(UnassignedVariableError):
        evaluate(parse_formula("x < y"), WordStructure("a", "aa"), {"x": 1})


def test_structure_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        WordStructure("ab", "abc")


def test_language_of():
    assert language_of(parse_formula("false"), "ab", 3) == set()
    assert language_of(parse_formula("forall x. Qa(x)"), "ab", 2) == {"", "a", "aa"}
    got = language_of(parse_formula("!exists i.(even(i) & Qb(i))"), "ab", 2)
    assert got == {"", "a", "b", "aa", "ba"}


def test_relation_of_examples():
    plus = {(a, b, a + b) for a in range(1, 4) for b in range(1, 4) if a + b <= 4}
    assert relation_of(parse_formula("plus(x,y,z)"), "xyz", 4) == plus
    assert relation_of(parse_formula("x = x"), "x", 3) == {(1,), (2,), (3,)}
    assert relation_of(parse_formula("x < y & y < x"), "xy", 5) == set()


def test_relation_of_plus_to_64():
    full = relation_of(parse_formula("plus(x,y,z)"), "xyz", 64)
    assert full == {(a, b, a + b) for a in range(1, 64) for b in range(1, 64) if a + b <= 64}
    for bound in range(1, 13):
        got = relation_of(parse_formula("plus(x,y,z)"), "xyz", bound)
        assert got == {t for t in full if max(t) <= bound}


def test_relation_needs_letter_free_formula():
    with pytest.raises(LetterAtomError):
        relation_of(parse_formula("Qa(x)"), "x", 3)


def test_window_disagreement_is_visible():
    # "x is the last position" depends on the universe size
    phi = parse_formula("!exists y. x < y")
    assert relation_of(phi, "x", 4) == set()
    assert set(window_disagreements(phi, "x", 4)) == {(1,), (2,), (3,), (4,)}


def test_lindstrom_examples():
    a_star = Language.of_strings("astar", "ab", lambda w: set(w) <= {"a"})
    a_plus = Language.of_strings("aplus", "ab", lambda w: len(w) > 0 and set(w) <= {"a"})
    s3, s2 = WordStructure("c", "ccc"), WordStructure("c", "cc")
    assert eval_lindstrom(a_star, [Const(True)], s3, {}, "y")
    assert not eval_lindstrom(a_plus, [Const(False)], s2, {}, "y")
    with pytest.raises(LindstromArityError):
        eval_lindstrom(a_star, [Const(True), Const(False)], s3, {}, "y")


def test_lindstrom_first_match():
    seen = []
    lang = Language("rec", ("p", "q", "r"), lambda w: seen.append(w) or True)
    eval_lindstrom(lang, [parse_formula("y < x"), parse_formula("y < z")], WordStructure("c", "cccc"),
                   {"x": 2, "z": 3}, "y")
    assert seen == [("p", "q", "r", "r")]


def test_registry_extension():
    reg = DEFAULT_REGISTRY.with_predicate("square", 1, lambda a, m: int(a[0] ** 0.5) ** 2 == a[0])
    phi = parse_formula("square(x)", reg)
    assert relation_of(phi, "x", 10, registry=reg) == {(1,), (4,), (9,)}


VARS = ("x", "y", "z")
ATOMS = st.one_of(
    st.builds(Const, st.booleans()),
    st.builds(LetterAt, st.sampled_from("abc"), st.sampled_from(VARS)),
    st.builds(Less, st.sampled_from(VARS), st.sampled_from(VARS)),
    st.builds(Equal, st.sampled_from(VARS), st.sampled_from(VARS)),
    st.builds(lambda v: NumAtom("even", (v,)), st.sampled_from(VARS)),
    st.builds(lambda a, b, c: NumAtom("plus", (a, b, c)), *[st.sampled_from(VARS)] * 3),
    st.builds(lambda a, b: NumAtom("bit", (a, b)), *[st.sampled_from(VARS)] * 2),
)


def _grow(children):
    return st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
        st.builds(Iff, children, children),
        st.builds(Exists, st.sampled_from(VARS), children),
        st.builds(Forall, st.sampled_from(VARS), children),
        st.builds(Majority, st.sampled_from(VARS), children),
        st.builds(lambda q, r, v, b: ModExists(q, r % q, v, b), st.integers(1, 5), st.integers(0, 4),
                  st.sampled_from(VARS), children),
    )


@settings(max_examples=300, deadline=None)
@given(st.recursive(ATOMS, _grow, max_leaves=10), st.text("abc", max_size=8), st.data())
def test_agrees_with_reference(phi, word, data):
    if not word:
        env = {}
        phi = Forall("x", Forall("y", Forall("z", phi)))
    else:
        env = {v: data.draw(st.integers(1, len(word))) for v in VARS}
    got = evaluate(phi, WordStructure("abc", word), env)
    assert got == reference_eval(phi, word, env)


@pytest.mark.parametrize("q", range(1, 6))
def test_modexists_counts_witnesses(q):
    for n in range(9):
        for word in itertools.product("ab", repeat=n):
            count = word.count("a")
            for r in range(q):
                phi = ModExists(q, r, "x", LetterAt("a", "x"))
                assert evaluate(phi, WordStructure("ab", word)) == (count % q == r)

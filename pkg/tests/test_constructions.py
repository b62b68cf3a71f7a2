from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from duality.constructions import (
    FORBIDDEN_WINDOWS, ClaimHypothesisError, ComplementDecomposition, addition_dpda,
    addition_language, build_tuple_transformation, complement_decomposition_member,
    immerman_member, in_A, int_of, modified_immerman_member, npda_for_A, regular_components,
    successor_window_check, tuple_transformation_alphabet, unequal_blocks_npda, wotschke_member,
)
from duality.logic import WordStructure, apply_transformation, eval_lindstrom
from duality.structures import encode, format_word
from duality.verify.oracles import (
    immerman_words, modified_immerman_words, oracle_immerman, oracle_in_A, oracle_successor,
    oracle_wotschke,
)

GOLDEN = Path(__file__).parent / "golden"


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from ("".join(w) for w in itertools.product(alphabet, repeat=n))


def test_forbidden_windows_golden():
    assert len(set(FORBIDDEN_WINDOWS)) == 8
    assert "\n".join(FORBIDDEN_WINDOWS) + "\n" == (GOLDEN / "forbidden_windows.txt").read_text()


def test_int_of():
    assert int_of("101") == 5
    assert int_of("000") == 0
    assert int_of("1") == 1
    with pytest.raises(ValueError):
        int_of("")


def test_window_check_examples():
    assert successor_window_check("11", "00")
    assert not successor_window_check("00", "11")
    assert successor_window_check("01", "10")
    with pytest.raises(ClaimHypothesisError):
        successor_window_check("00", "10")
    with pytest.raises(ValueError):
        successor_window_check("0", "01")


@pytest.mark.parametrize("n", range(1, 9))
def test_window_check_matches_arithmetic(n):
    for u, v in itertools.product(itertools.product("01", repeat=n), repeat=2):
        u, v = "".join(u), "".join(v)
        if u[-1] != v[-1]:
            assert successor_window_check(u, v) == oracle_successor(u, v)


def test_addition_examples():
    dpda = addition_dpda()
    assert dpda.accepts(encode((2, 3, 5), 5))
    assert dpda.accepts(encode((3, 2, 5), 5))
    assert dpda.accepts(encode((1, 1, 2), 2))
    assert not dpda.accepts(encode((2, 2, 5), 6))
    assert not dpda.accepts(encode((3, 4, 2), 5))


def test_addition_lindstrom():
    lang = addition_language()
    assert lang.alphabet == tuple_transformation_alphabet(3)
    phis = build_tuple_transformation(3)
    s = WordStructure.blank(6)
    assert eval_lindstrom(lang, phis, s, {"x1": 2, "x2": 3, "x3": 5}, "y")
    assert not eval_lindstrom(lang, phis, s, {"x1": 2, "x2": 3, "x3": 6}, "y")


def test_tuple_transformation_examples():
    assert len(build_tuple_transformation(3)) == 7
    one = build_tuple_transformation(1)
    word = apply_transformation(one, tuple_transformation_alphabet(1), WordStructure.blank(3), {"x1": 2}, "y")
    assert format_word(word) == ". x1 ."
    two, delta = build_tuple_transformation(2), tuple_transformation_alphabet(2)
    got = apply_transformation(two, delta, WordStructure.blank(1), {"x1": 1, "x2": 1}, "y")
    assert format_word(got) == "x1+x2"
    got = apply_transformation(two, delta, WordStructure.blank(2), {"x1": 2, "x2": 1}, "y")
    assert format_word(got) == "x2 x1"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tuple_transformation_encodes(n):
    phis, delta = build_tuple_transformation(n), tuple_transformation_alphabet(n)
    names = [f"x{i}" for i in range(1, n + 1)]
    for c in itertools.product(range(1, 5), repeat=n):
        for m in range(max(c), 6):
            got = apply_transformation(phis, delta, WordStructure.blank(m), dict(zip(names, c)), "y")
            assert got == encode(c, m)


def test_immerman_examples():
    assert immerman_member("00a01a10a11")
    assert immerman_member("000a001a010a011a100a101a110a111")
    assert not immerman_member("a")
    assert not immerman_member("")
    assert not immerman_member("0a1a")


def test_immerman_matches_oracle():
    assert {w for w in words("01a", 11) if immerman_member(w)} == immerman_words(11)


def test_in_A_examples():
    assert in_A("00a01a11a11a")
    assert not in_A("0a1a0a1")
    assert not in_A("00a01a10a11a00a01")
    assert not in_A("a")
    assert not in_A("00a01001a10a11")


def test_in_A_matches_oracle():
    for w in words("01a", 9):
        assert in_A(w) == oracle_in_A(w), w


def test_complement_examples():
    assert complement_decomposition_member("a")
    assert not complement_decomposition_member("00a01a10a11")
    assert complement_decomposition_member("00a01001a10a11")
    assert ComplementDecomposition().pieces("00a01a11a11a")[0] == "A"
    assert "|u|!=|v|" in ComplementDecomposition().pieces("00a01001a10a11")


def test_listed_words():
    decomposition = ComplementDecomposition()
    for w in ("a", "0a1a0a1", "01a10a11a00", "00a01a10a11a00a01", "00a01001a10a11"):
        assert not in_A(w)
        assert decomposition.member(w) == (not oracle_immerman(w))


def test_regular_pieces():
    comps = regular_components()
    assert set(comps) == {"a*", "S*a0*aS*", "S*a1*aS*", "{0,1}*1S*", "S*0{0,1}*"}
    assert comps["a*"].accepts("aaa")
    assert comps["S*a0*aS*"].accepts("1aa0")
    assert comps["{0,1}*1S*"].accepts("01a00")
    assert not comps["S*0{0,1}*"].accepts("01a1")


def test_complement_exact_to_10():
    for w in words("01a", 10):
        assert complement_decomposition_member(w) == (not oracle_immerman(w)), w


def test_A_is_inside_the_complement():
    for w in words("01a", 9):
        if in_A(w):
            assert complement_decomposition_member(w)


def _adjacent_equal(w: str) -> bool:
    bs = w.split("a")
    return all(len(u) == len(v) for u, v in zip(bs, bs[1:]))


def test_npda_examples():
    npda = npda_for_A()
    assert npda.accepts("00a01a11a11a")
    assert not npda.accepts("01a10a11a00")
    assert not npda.accepts("00a01001a10a11")


def test_npda_contains_A_and_stays_in_complement():
    npda = npda_for_A()
    for w in words("01a", 8):
        got = npda.accepts(w)
        if in_A(w):
            assert got, w
        if got:
            assert not oracle_immerman(w), w
        if _adjacent_equal(w):
            assert got == in_A(w), w


def test_npda_extras_have_unequal_adjacent_blocks():
    # the language A is not context free, so some words must differ; they all
    # sit where the unequal-blocks piece of the decomposition already applies
    npda, unequal = npda_for_A(), unequal_blocks_npda()
    extras = [w for w in words("01a", 8) if npda.accepts(w) != in_A(w)]
    assert extras
    assert all(unequal.accepts(w) for w in extras)


def test_unequal_blocks_npda():
    unequal = unequal_blocks_npda()
    for w in words("01a", 8):
        assert unequal.accepts(w) == (not _adjacent_equal(w)), w


def test_modified_immerman():
    assert modified_immerman_member("000a100a010a110a100a101a110a111")
    assert modified_immerman_member("00a10a10a11")
    assert not modified_immerman_member("00a01a10a11")
    assert not modified_immerman_member("")
    assert {w for w in words("01a", 11) if modified_immerman_member(w)} == modified_immerman_words(11)


def test_wotschke():
    assert wotschke_member("ab")
    assert wotschke_member("aabaab")
    assert not wotschke_member("aab")
    assert wotschke_member("")
    for w in words("ab", 12):
        assert wotschke_member(w) == oracle_wotschke(w)

"""Symbols, words, ordered alphabets, and the morphisms that generate the
F/P/Q word family."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fibrepair import (
    AB,
    Morphism,
    OrderedAlphabet,
    ResourceLimitError,
    Word,
    apply_morphism,
    as_word,
    fib_number,
    fib_word,
    fibonacci_morphism,
    is_terminal,
    nonterminal,
    p_morphism,
    p_word,
    q_morphism,
    q_word,
    reverse,
    reverse_phi,
    right_rotation,
    symbol_name,
    terminal,
)

FIB = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597,
       2584, 4181, 6765, 10946, 17711, 28657, 46368, 75025]

F_WORDS = {
    1: "b",
    2: "a",
    3: "ab",
    4: "aba",
    5: "abaab",
    6: "abaababa",
    7: "abaababaabaab",
    8: "abaababaabaababaababa",
    9: "abaababaabaababaababaabaababaabaab",
    10: "abaababaabaababaababaabaababaabaababaababaabaababaababa",
}

P_WORDS = {
    1: "a",
    2: "ab",
    3: "ababb",
    4: "ababbababbabb",
    5: "ababbababbabbababbababbabbababbabb",
}

Q_WORDS = {
    1: "a",
    2: "aab",
    3: "aabaabab",
    4: "aabaababaabaababaabab",
    5: "aabaababaabaababaababaabaababaabaababaababaabaababaabab",
}

texts = st.text(alphabet="ab", max_size=60)


def test_fib_numbers():
    assert [fib_number(i) for i in range(1, 26)] == FIB
    with pytest.raises(ValueError):
        fib_number(0)


def test_f_words_frozen():
    for i, expected in F_WORDS.items():
        assert str(fib_word(i)) == expected
        assert len(fib_word(i)) == fib_number(i)


def test_p_words_frozen():
    for i, expected in P_WORDS.items():
        assert str(p_word(i)) == expected
        assert len(p_word(i)) == fib_number(2 * i - 1)


def test_q_words_frozen():
    for i, expected in Q_WORDS.items():
        assert str(q_word(i)) == expected
        assert len(q_word(i)) == fib_number(2 * i)


def test_f_recurrence():
    for i in range(3, 20):
        assert fib_word(i) == fib_word(i - 1) + fib_word(i - 2)


def test_generators_step_by_their_morphisms():
    phi, pi, theta = fibonacci_morphism(), p_morphism(), q_morphism()
    for i in range(1, 12):
        assert phi(fib_word(i)) == fib_word(i + 1)
    for i in range(1, 7):
        assert pi(p_word(i)) == p_word(i + 1)
        assert theta(q_word(i)) == q_word(i + 1)


def test_other_alphabets():
    ba = AB.swapped()
    assert str(fib_word(5, ba)) == "babba"
    xy = OrderedAlphabet.of("xy")
    assert str(fib_word(3, xy)) == "xy"
    assert str(q_word(2, xy)) == "xxy"
    assert str(p_word(3, ba)) == "babaa"
    assert ba.swapped() == AB


def test_length_cap():
    with pytest.raises(ResourceLimitError):
        fib_word(17, max_length=1000)  # f_17 = 1597
    assert len(fib_word(16, max_length=1000)) == 987
    with pytest.raises(ResourceLimitError):
        p_word(9, max_length=1000)  # |P_9| = f_17
    with pytest.raises(ResourceLimitError):
        q_word(9, max_length=1000)  # |Q_9| = f_18 = 2584


def test_order_validation():
    for gen in (fib_word, p_word, q_word):
        with pytest.raises(ValueError):
            gen(0)


def test_rotation_and_reverse_frozen():
    assert str(right_rotation("abaab")) == "babaa"
    assert right_rotation(fib_word(8)) == q_word(4)
    assert right_rotation(fib_word(6)) == q_word(3)
    assert str(reverse("abaab")) == "baaba"
    with pytest.raises(ValueError):
        right_rotation("")


@given(texts.filter(lambda t: t))
def test_rotation_moves_last_symbol(t):
    assert str(right_rotation(t)) == t[-1] + t[:-1]


@given(texts)
def test_reverse_involution(t):
    assert reverse(reverse(t)) == Word.from_text(t)


@given(texts, texts)
def test_morphisms_distribute_over_concatenation(x, y):
    for m in (fibonacci_morphism(), p_morphism(), q_morphism()):
        assert apply_morphism(m, x + y) == apply_morphism(m, x) + apply_morphism(m, y)


def test_single_symbol_substitutions():
    psi = reverse_phi(terminal("b"), "ba")
    assert str(psi(Word.from_text("ab"))) == "aba"
    assert str(psi(Word.from_text("cc"))) == "cc"  # outside symbols are fixed
    assert str(reverse_phi(terminal("b"), "ba")(p_word(3))) == str(fib_word(6))
    assert str(reverse_phi(terminal("b"), "ab")(p_word(3))) == str(q_word(3))
    assert str(reverse_phi(terminal("a"), "ab")(q_word(3))) == str(p_word(4))
    with pytest.raises(ValueError):
        reverse_phi(terminal("a"), "")


def test_morphism_domain_errors():
    a = terminal("a")
    strict = Morphism({a: Word((a,))})
    with pytest.raises(ValueError):
        strict(Word.from_text("ab"))
    with pytest.raises(ValueError):
        Morphism({a: Word(())})


def test_symbols():
    a = terminal("a")
    assert terminal("a") == a and is_terminal(a) and symbol_name(a) == "a"
    with pytest.raises(ValueError):
        terminal("ab")
    fresh1, fresh2 = nonterminal(), nonterminal()
    assert fresh1 != fresh2 and not is_terminal(fresh1)
    assert symbol_name(fresh1).startswith("X")
    assert nonterminal("K1") == nonterminal("K1")


def test_alphabet_validation():
    with pytest.raises(ValueError):
        OrderedAlphabet.of("a")
    with pytest.raises(ValueError):
        OrderedAlphabet(terminal("a"), terminal("a"))


@given(texts)
def test_word_text_round_trip(t):
    assert str(Word.from_text(t)) == t


def test_word_behaves_like_a_tuple():
    w = Word.from_text("abab")
    assert isinstance(w[1:3], Word) and str(w[1:3]) == "ba"
    assert isinstance(w + w, Word) and len(w + w) == 8
    assert str(w * 2) == "abababab" == str(2 * w)
    assert w[0] == terminal("a")
    assert as_word(w) is w
    assert as_word([terminal("b"), terminal("a")]) == Word.from_text("ba")

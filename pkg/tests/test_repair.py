"""RePair: bigram counting, replacement, deterministic tie-breaks, exhaustive
enumeration up to renaming, and the F/P/Q strategy graph."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from fibrepair import (
    OrderedAlphabet,
    ResourceLimitError,
    Word,
    canonicalize,
    count_nonoverlapping,
    enumerate_repair,
    expand,
    fib_word,
    most_frequent_bigrams,
    nonterminal,
    p_word,
    q_word,
    repair,
    repair_traced,
    replace_all,
    strategy_graph,
    symbol_name,
    terminal,
    validate,
)

from reference import ref_count_nonoverlapping

A, B = terminal("a"), terminal("b")
AB_PAIR = (A, B)


def test_count_nonoverlapping():
    assert count_nonoverlapping(fib_word(7), AB_PAIR) == 5
    assert count_nonoverlapping("abaababa", AB_PAIR) == 3
    assert count_nonoverlapping("aaa", (A, A)) == 1
    assert count_nonoverlapping("aaaa", (A, A)) == 2
    assert count_nonoverlapping("ab", (B, A)) == 0
    with pytest.raises(ValueError):
        count_nonoverlapping("a", AB_PAIR)


@given(st.text(alphabet="ab", min_size=2, max_size=60))
def test_count_nonoverlapping_matches_dp(t):
    for bigram in ("aa", "ab", "ba", "bb"):
        pair = (terminal(bigram[0]), terminal(bigram[1]))
        assert count_nonoverlapping(t, pair) == ref_count_nonoverlapping(t, bigram)
        if bigram[0] != bigram[1]:
            assert count_nonoverlapping(t, pair) == t.count(bigram)


def test_most_frequent_bigrams():
    def names(w):
        return sorted(symbol_name(x) + symbol_name(y) for x, y in most_frequent_bigrams(w))

    assert names("abaab") == ["ab"]
    assert names(fib_word(6)) == ["ab", "ba"]
    assert names(fib_word(8)) == ["ab", "ba"]
    assert names("aa") == ["aa"]


def test_replace_all_family_identities():
    X = nonterminal("X")
    assert replace_all(fib_word(8), (B, A), X) == p_word(4, OrderedAlphabet(A, X))
    assert replace_all(fib_word(7), AB_PAIR, X) == fib_word(6, OrderedAlphabet(X, A))
    assert replace_all(q_word(3), AB_PAIR, X) == Word((A, X, A, X, X))
    assert replace_all(p_word(4), AB_PAIR, X) == Word((X, X, B, X, X, B, X, B))
    assert replace_all("aaa", (A, A), X) == Word((X, A))
    with pytest.raises(ValueError, match="already occurs"):
        replace_all(Word((A, X, B)), AB_PAIR, X)


def test_repair_sizes():
    assert repair("a").size == 1
    assert repair("ab").size == 3
    assert repair("abaababa").size == 6
    assert repair("ababaabaaba").size == 7
    for n in range(5, 16):
        assert repair(fib_word(n)).size == n


def test_repair_traced():
    g, trace = repair_traced(fib_word(6))
    assert g == trace.to_grammar()
    assert len(trace.steps) == 2
    assert len(trace.initial) == 8
    assert len(trace.final_sequence) == 3
    assert "--[" in trace.format()
    for step in trace.steps:
        assert len(step.after) < len(step.before)
    with pytest.raises(ValueError, match="empty"):
        repair_traced("")
    with pytest.raises(ValueError, match="terminal"):
        repair_traced(Word((nonterminal("X"),)))


def test_policies_agree_on_fibonacci():
    for n in range(5, 12):
        w = fib_word(n)
        assert repair(w, "first").size == repair(w, "lex").size == n


def test_enumerate_repair():
    grammars = enumerate_repair("abaababa")
    assert len(grammars) == 4
    assert {g.size for g in grammars} == {6}
    assert canonicalize(repair("abaababa", "first")) in grammars
    assert canonicalize(repair("abaababa", "lex")) in grammars
    for g in grammars:
        assert validate(g) is None
        assert str(expand(g)) == "abaababa"


def test_enumerate_repair_fibonacci_census():
    for n in range(6, 13):
        grammars = enumerate_repair(fib_word(n))
        assert len(grammars) == 2 * (n // 2) - 2
        assert {g.size for g in grammars} == {n}


def test_enumerate_repair_guards():
    with pytest.raises(ResourceLimitError, match="enumeration budget"):
        enumerate_repair("a" * 7, budget=5)
    with pytest.raises(ResourceLimitError, match="too long"):
        enumerate_repair("abcdefghijklm")  # final sequence of 13 distinct symbols
    with pytest.raises(ValueError):
        enumerate_repair("")


def test_strategy_graph():
    sg = strategy_graph(8)
    assert sg.source == "F8"
    assert sg.sinks == ("F4", "Q2")
    assert len(sg.edges) == 9
    assert ("Q3", "P3") in sg.edges
    assert ("F8", "P4") in sg.edges and ("F6", "P3") in sg.edges
    assert sg.path_count() == 3
    assert strategy_graph(6).path_count() == 2
    assert strategy_graph(6).successors("F6") == ("F5", "P3")
    dot = sg.to_dot()
    assert "rankdir=LR" in dot and "F8 -> P4;" in dot
    with pytest.raises(ValueError):
        strategy_graph(5)


def test_strategy_graph_edges_are_replacements():
    # every edge is realized by one replace-all step, up to letter renaming
    def pattern(w):
        order = {}
        return tuple(order.setdefault(s, len(order)) for s in w)

    words = {f"F{i}": fib_word(i) for i in range(4, 9)}
    words |= {f"P{i}": p_word(i) for i in (3, 4)}
    words |= {f"Q{i}": q_word(i) for i in (2, 3)}
    X = nonterminal("X")
    for u, v in strategy_graph(8).edges:
        src, dst = words[u], words[v]
        images = [pattern(replace_all(src, bg, X)) for bg in ((A, B), (B, A))]
        assert pattern(dst) in images, (u, v)


@settings(deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=80))
def test_repair_is_correct(t):
    for policy in ("first", "lex"):
        g = repair(t, policy)
        assert validate(g) is None
        assert str(expand(g)) == t


@settings(deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=12))
def test_enumeration_contains_every_policy_run(t):
    grammars = enumerate_repair(t)
    assert canonicalize(repair(t, "first")) in grammars
    assert canonicalize(repair(t, "lex")) in grammars
    for g in grammars:
        assert str(expand(g)) == t

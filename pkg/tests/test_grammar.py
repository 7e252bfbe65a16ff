"""Straight-line programs: validation, expansion, derivation trees, the
induced factorization, canonical forms, and JSON round trips."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fibrepair import (
    Grammar,
    Production,
    ResourceLimitError,
    canonicalize,
    derivation_tree,
    equivalent,
    expand,
    expansion_lengths,
    fib_number,
    fib_word,
    from_recursive_fib,
    g_factorization,
    grammar_from_dict,
    grammar_from_json,
    grammar_to_dict,
    grammar_to_json,
    nonterminal,
    partial_derivation_tree,
    repair,
    rhs_length_sum,
    size,
    symbol_name,
    terminal,
    validate,
)


def build(productions, start):
    return grammar_from_dict({"start": start, "productions": productions})


ABA = build(
    [
        {"lhs": "A", "rhs": "a"},
        {"lhs": "B", "rhs": "b"},
        {"lhs": "C", "rhs": ["A", "B"]},
        {"lhs": "S", "rhs": ["C", "A"]},
    ],
    "S",
)


def test_expand_and_size():
    assert str(expand(ABA)) == "aba"
    assert size(ABA) == ABA.size == 4
    assert rhs_length_sum(ABA) == 6
    assert validate(ABA) is None
    assert expansion_lengths(ABA)[nonterminal("S")] == 3
    assert expansion_lengths(ABA)[nonterminal("C")] == 2


def test_recursive_fib_grammars():
    for n in range(3, 13):
        g = from_recursive_fib(n)
        assert g.size == n
        assert expand(g) == fib_word(n)
        assert validate(g) is None
        assert expansion_lengths(g)[g.start] == fib_number(n)
    with pytest.raises(ValueError):
        from_recursive_fib(2)


def test_validation_messages():
    a, b = terminal("a"), terminal("b")
    x, y = nonterminal("VX"), nonterminal("VY")

    def bad(productions, start):
        msg = validate(Grammar(productions, start))
        assert msg is not None
        return msg

    assert "is a terminal" in bad([Production(a, (a,))], x)
    assert "unary rhs must be a terminal" in bad([Production(x, (y,))], x)
    assert "must be two nonterminals" in bad(
        [Production(x, (a,)), Production(y, (x, b))], y
    )
    assert "one or two symbols" in bad([Production(x, (a, a, a))], x)
    assert "defined more than once" in bad(
        [Production(x, (a,)), Production(x, (b,))], x
    )
    assert "start symbol" in bad([Production(x, (a,))], a)
    assert "no production" in bad([Production(x, (a,))], y)
    assert "undefined nonterminal" in bad([Production(x, (y, y))], x)
    assert "cycle" in bad(
        [Production(x, (y, y)), Production(y, (x, x))], x
    )
    assert "unreachable" in bad(
        [Production(x, (a,)), Production(y, (b,))], x
    )
    with pytest.raises(ValueError):
        expand(Grammar([Production(x, (y,))], x))


def test_canonicalize():
    c1, c2 = canonicalize(ABA), canonicalize(canonicalize(ABA))
    assert c1 == c2
    assert symbol_name(c1.start) == "N1"
    assert str(expand(c1)) == "aba"
    # a renamed copy canonicalizes to the same grammar
    copy = build(
        [
            {"lhs": "S2", "rhs": ["C2", "A2"]},
            {"lhs": "C2", "rhs": ["A2", "B2"]},
            {"lhs": "A2", "rhs": "a"},
            {"lhs": "B2", "rhs": "b"},
        ],
        "S2",
    )
    assert canonicalize(copy) == c1
    assert equivalent(copy, ABA)


def test_equivalent_distinguishes_shapes():
    right = build(
        [
            {"lhs": "RA", "rhs": "a"},
            {"lhs": "RB", "rhs": "b"},
            {"lhs": "RC", "rhs": ["RB", "RA"]},
            {"lhs": "RS", "rhs": ["RA", "RC"]},
        ],
        "RS",
    )
    assert str(expand(right)) == "aba"
    assert not equivalent(right, ABA)
    assert equivalent(from_recursive_fib(5), repair(fib_word(5)))


def test_derivation_tree():
    g = from_recursive_fib(7)
    tree = derivation_tree(g)
    assert tree.leaf_count == 13
    spelled = "".join(symbol_name(g.rules[leaf][0]) for leaf in tree.iter_leaf_labels())
    assert spelled == str(fib_word(7))
    dot = tree.to_dot()
    assert dot.startswith("digraph derivation") and "shape=box" in dot
    with pytest.raises(ResourceLimitError):
        derivation_tree(from_recursive_fib(16)).to_dot()  # 987 leaves > 256


def test_partial_derivation_tree():
    g = from_recursive_fib(6)
    pt = partial_derivation_tree(g)
    assert (pt.root.start, pt.root.end) == (1, 8)
    assert tuple(leaf.end - leaf.start + 1 for leaf in pt.leaves) == (1, 1, 1, 2, 3)
    assert pt.leaf_count == 5
    dot = pt.to_dot()
    assert dot.startswith("digraph partial_derivation") and "shape=circle" in dot


def test_g_factorization():
    f = g_factorization(from_recursive_fib(6))
    assert f.kind == "g"
    assert f.to_text() == "a|b|a|ab|aba"
    for n in range(3, 12):
        g = from_recursive_fib(n)
        f = g_factorization(g)
        assert str(f.subject) == str(fib_word(n))
        assert sum(f.lengths) == fib_number(n)


def test_json_round_trip():
    for g in (ABA, from_recursive_fib(8), repair("ababaabaaba")):
        assert grammar_from_json(grammar_to_json(g)) == g
    d = grammar_to_dict(ABA)
    assert d["start"] == "S"
    assert {"lhs": "A", "rhs": "a"} in d["productions"]
    assert {"lhs": "C", "rhs": ["A", "B"]} in d["productions"]


def test_malformed_grammar_dicts():
    with pytest.raises(ValueError):
        grammar_from_dict(
            {"start": "S", "productions": [{"lhs": "S", "rhs": "ab"}]}
        )
    with pytest.raises(ValueError):
        grammar_from_dict(
            {"start": "S", "productions": [{"lhs": "S", "rhs": ["A"]}]}
        )
    with pytest.raises(KeyError):
        grammar_from_dict({"productions": []})


@given(st.text(alphabet="abc", min_size=1, max_size=40))
def test_repair_grammars_induce_tilings(t):
    g = repair(t)
    f = g_factorization(g)
    assert "".join(str(p) for p in f.phrases) == t
    assert f.size <= g.size

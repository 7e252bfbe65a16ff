"""Straight-line programs: validation, expansion, derivation trees, partial
derivation trees, the induced factorization, and equivalence up to renaming.

A grammar holds one production per nonterminal — either A -> (terminal) or
A -> B C — plus a start symbol, and derives exactly one word.  Size is the
number of productions, unary rules included.  Derivation trees are views over
the grammar DAG (leaf counts and intervals come from memoized expansion
lengths, never from materializing one node per derived symbol); the partial
derivation tree keeps only the leftmost expansion of each label and is
materialized explicitly, since it has at most 2|G|+1 nodes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import ResourceLimitError
from .factorize import Factorization
from .words import AB, OrderedAlphabet, Symbol, Word, is_terminal, nonterminal, symbol_name, terminal


class Production(NamedTuple):
    """lhs -> rhs, where rhs is one terminal or two nonterminals."""

    lhs: Symbol
    rhs: tuple

    @property
    def is_unary(self) -> bool:
        return len(self.rhs) == 1

    def __str__(self) -> str:
        right = " ".join(symbol_name(s) for s in self.rhs)
        return f"{symbol_name(self.lhs)} -> {right}"


class Grammar:
    """An SLP: an ordered collection of productions and a start symbol."""

    def __init__(self, productions, start: Symbol):
        self.productions = tuple(
            p if isinstance(p, Production) else Production(p[0], tuple(p[1]))
            for p in productions
        )
        self.start = start
        self._rules: dict | None = None
        self._lengths: dict | None = None
        self._expansion: Word | None = None
        self._violation: str | None = None
        self._validated = False
        self._key = None

    @property
    def rules(self) -> dict:
        if self._rules is None:
            d: dict = {}
            for p in self.productions:
                d.setdefault(p.lhs, p.rhs)
            self._rules = d
        return self._rules

    @property
    def size(self) -> int:
        return len(self.productions)

    def pretty(self) -> str:
        return "\n".join(str(p) for p in self.productions)

    def _eq_key(self):
        if self._key is None:
            self._key = (frozenset(self.productions), self.start)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Grammar):
            return NotImplemented
        return self._eq_key() == other._eq_key()

    def __hash__(self) -> int:
        return hash(self._eq_key())

    def __repr__(self) -> str:
        return f"Grammar(size={self.size}, start={symbol_name(self.start)})"


def size(g: Grammar) -> int:
    """Number of productions, unary rules included."""
    return g.size


def rhs_length_sum(g: Grammar) -> int:
    """Total length of all right-hand sides (the alternative size measure)."""
    return sum(len(p.rhs) for p in g.productions)


def validate(g: Grammar) -> str | None:
    """None if g is a well-formed SLP, else a message naming the first problem.

    Checks, in order: production shapes, duplicate definitions, the start
    symbol, undefined references, cycles, and reachability.
    """
    if not g._validated:
        g._violation = _find_violation(g)
        g._validated = True
    return g._violation


def _find_violation(g: Grammar) -> str | None:
    for p in g.productions:
        if is_terminal(p.lhs):
            return f"production lhs {symbol_name(p.lhs)!r} is a terminal"
        if len(p.rhs) == 1:
            if not is_terminal(p.rhs[0]):
                return f"production {symbol_name(p.lhs)}: unary rhs must be a terminal"
        elif len(p.rhs) == 2:
            for s in p.rhs:
                if is_terminal(s):
                    return (
                        f"production {symbol_name(p.lhs)}: binary rhs must be "
                        f"two nonterminals, found terminal {symbol_name(s)!r}"
                    )
        else:
            return f"production {symbol_name(p.lhs)}: rhs must have one or two symbols"

    seen = set()
    for p in g.productions:
        if p.lhs in seen:
            return f"nonterminal {symbol_name(p.lhs)} is defined more than once"
        seen.add(p.lhs)

    if is_terminal(g.start):
        return f"start symbol {symbol_name(g.start)!r} is a terminal"
    if g.start not in seen:
        return f"start symbol {symbol_name(g.start)} has no production"

    rules = g.rules
    for p in g.productions:
        if len(p.rhs) == 2:
            for s in p.rhs:
                if s not in rules:
                    return (
                        f"production {symbol_name(p.lhs)}: "
                        f"undefined nonterminal {symbol_name(s)}"
                    )

    state: dict = {}  # 1 = on the current path, 2 = finished
    for root in rules:
        if state.get(root) == 2:
            continue
        stack = [(root, 0)]
        while stack:
            sym, idx = stack.pop()
            rhs = rules[sym]
            kids = rhs if len(rhs) == 2 else ()
            if idx == 0:
                state[sym] = 1
            if idx < len(kids):
                stack.append((sym, idx + 1))
                kid = kids[idx]
                kid_state = state.get(kid)
                if kid_state == 1:
                    return f"cycle through nonterminal {symbol_name(kid)}"
                if kid_state != 2:
                    stack.append((kid, 0))
            else:
                state[sym] = 2

    reachable = {g.start}
    frontier = [g.start]
    while frontier:
        rhs = rules[frontier.pop()]
        if len(rhs) == 2:
            for s in rhs:
                if s not in reachable:
                    reachable.add(s)
                    frontier.append(s)
    for p in g.productions:
        if p.lhs not in reachable:
            return f"unreachable nonterminal {symbol_name(p.lhs)}"
    return None


def _require_valid(g: Grammar) -> None:
    msg = validate(g)
    if msg is not None:
        raise ValueError(f"invalid grammar: {msg}")


def expansion_lengths(g: Grammar) -> dict:
    """Length of the word derived by each nonterminal."""
    if g._lengths is None:
        _require_valid(g)
        rules = g.rules
        lengths: dict = {}
        stack = list(rules)
        while stack:
            sym = stack[-1]
            if sym in lengths:
                stack.pop()
                continue
            rhs = rules[sym]
            if len(rhs) == 1:
                lengths[sym] = 1
                stack.pop()
                continue
            missing = [s for s in rhs if s not in lengths]
            if missing:
                stack.extend(missing)
            else:
                lengths[sym] = lengths[rhs[0]] + lengths[rhs[1]]
                stack.pop()
        g._lengths = lengths
    return g._lengths


def expand(g: Grammar) -> Word:
    """The unique word derived from the start symbol."""
    if g._expansion is None:
        _require_valid(g)
        rules = g.rules
        out = []
        stack = [g.start]
        while stack:
            rhs = rules[stack.pop()]
            if len(rhs) == 1:
                out.append(rhs[0])
            else:
                stack.append(rhs[1])
                stack.append(rhs[0])
        g._expansion = Word(out)
    return g._expansion


@dataclass(frozen=True)
class DerivationTree:
    """View of the full derivation tree, with terminals identified with their
    unary parents: leaves are the unary-labeled nodes, one per derived symbol."""

    grammar: Grammar

    @property
    def leaf_count(self) -> int:
        return expansion_lengths(self.grammar)[self.grammar.start]

    def iter_leaf_labels(self) -> Iterator[Symbol]:
        """Labels of the leaves, left to right (spells the derived word)."""
        rules = self.grammar.rules
        stack = [self.grammar.start]
        while stack:
            sym = stack.pop()
            rhs = rules[sym]
            if len(rhs) == 1:
                yield sym
            else:
                stack.append(rhs[1])
                stack.append(rhs[0])

    def to_dot(self, max_leaves: int = 256) -> str:
        """DOT rendering with one node per occurrence; leaves are boxed."""
        if self.leaf_count > max_leaves:
            raise ResourceLimitError(
                f"derivation tree has {self.leaf_count} leaves; "
                f"cap is {max_leaves}"
            )
        rules = self.grammar.rules
        lines = ["digraph derivation {", '  node [fontname="Helvetica"];']
        counter = 0

        def emit(sym: Symbol) -> str:
            nonlocal counter
            node = f"n{counter}"
            counter += 1
            rhs = rules[sym]
            if len(rhs) == 1:
                label = f"{symbol_name(sym)}\\n{symbol_name(rhs[0])}"
                lines.append(f'  {node} [label="{label}" shape=box];')
            else:
                lines.append(f'  {node} [label="{symbol_name(sym)}"];')
                for kid in rhs:
                    lines.append(f"  {node} -> {emit(kid)};")
            return node

        emit(self.grammar.start)
        lines.append("}")
        return "\n".join(lines)


def derivation_tree(g: Grammar) -> DerivationTree:
    _require_valid(g)
    return DerivationTree(g)


@dataclass(frozen=True)
class PTNode:
    """A node of the partial derivation tree; start/end are 1-based inclusive."""

    label: Symbol
    start: int
    end: int
    children: tuple


@dataclass(frozen=True)
class PartialDerivationTree:
    """The maximal subtree keeping only the leftmost expansion of each label."""

    grammar: Grammar
    root: PTNode

    @property
    def leaves(self) -> tuple:
        out: list[PTNode] = []

        def walk(node: PTNode) -> None:
            if node.children:
                for kid in node.children:
                    walk(kid)
            else:
                out.append(node)

        walk(self.root)
        return tuple(out)

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    def to_dot(self) -> str:
        """DOT rendering; leaves are circled and carry their word interval."""
        lines = ["digraph partial_derivation {", '  node [fontname="Helvetica"];']
        counter = 0

        def emit(node: PTNode) -> str:
            nonlocal counter
            name = f"n{counter}"
            counter += 1
            if node.children:
                lines.append(f'  {name} [label="{symbol_name(node.label)}"];')
                for kid in node.children:
                    lines.append(f"  {name} -> {emit(kid)};")
            else:
                label = f"{symbol_name(node.label)}\\n[{node.start}..{node.end}]"
                lines.append(f'  {name} [label="{label}" shape=circle];')
            return name

        emit(self.root)
        lines.append("}")
        return "\n".join(lines)


def partial_derivation_tree(g: Grammar) -> PartialDerivationTree:
    """Expand each label only at its leftmost occurrence (pre-order scan)."""
    _require_valid(g)
    rules = g.rules
    lengths = expansion_lengths(g)
    seen: set = set()

    def build(sym: Symbol, pos: int) -> PTNode:
        rhs = rules[sym]
        end = pos + lengths[sym] - 1
        if len(rhs) == 2 and sym not in seen:
            seen.add(sym)
            left = build(rhs[0], pos)
            right = build(rhs[1], pos + lengths[rhs[0]])
            return PTNode(sym, pos, end, (left, right))
        return PTNode(sym, pos, end, ())

    return PartialDerivationTree(g, build(g.start, 1))


def g_factorization(g: Grammar) -> Factorization:
    """The factorization whose phrases are the partial derivation tree's leaves."""
    pt = partial_derivation_tree(g)
    lengths = tuple(leaf.end - leaf.start + 1 for leaf in pt.leaves)
    return Factorization(expand(g), lengths, "g")


def _canonical_symbol(k: int) -> Symbol:
    return nonterminal(f"N{k}")


def canonicalize(g: Grammar) -> Grammar:
    """The representative of g's renaming class: nonterminals renumbered
    N1, N2, ... by first occurrence in a pre-order walk from the start
    (each label visited once), productions emitted in that order."""
    _require_valid(g)
    rules = g.rules
    mapping: dict = {}

    def visit(sym: Symbol) -> None:
        if sym in mapping:
            return
        mapping[sym] = _canonical_symbol(len(mapping) + 1)
        rhs = rules[sym]
        if len(rhs) == 2:
            visit(rhs[0])
            visit(rhs[1])

    visit(g.start)
    prods = []
    for sym, renamed in mapping.items():
        rhs = rules[sym]
        if len(rhs) == 1:
            prods.append(Production(renamed, rhs))
        else:
            prods.append(Production(renamed, (mapping[rhs[0]], mapping[rhs[1]])))
    return Grammar(prods, mapping[g.start])


def equivalent(g1: Grammar, g2: Grammar) -> bool:
    """True iff the grammars differ only by a renaming of nonterminals."""
    return canonicalize(g1) == canonicalize(g2)


def from_recursive_fib(n: int, ab: OrderedAlphabet = AB) -> Grammar:
    """The recurrence F_i = F_{i-1} F_{i-2} read as a grammar of size n."""
    if n < 3:
        raise ValueError("order must be >= 3")
    rule_a = nonterminal()
    rule_b = nonterminal()
    prods = [Production(rule_a, (ab.first,)), Production(rule_b, (ab.second,))]
    stage = {1: rule_b, 2: rule_a}
    for i in range(3, n + 1):
        x = nonterminal()
        prods.append(Production(x, (stage[i - 1], stage[i - 2])))
        stage[i] = x
    return Grammar(prods, stage[n])


def grammar_to_dict(g: Grammar) -> dict:
    prods = []
    for p in g.productions:
        if p.is_unary:
            rhs = symbol_name(p.rhs[0])
        else:
            rhs = [symbol_name(s) for s in p.rhs]
        prods.append({"lhs": symbol_name(p.lhs), "rhs": rhs})
    return {"start": symbol_name(g.start), "productions": prods}


def grammar_to_json(g: Grammar) -> str:
    return json.dumps(grammar_to_dict(g))


def grammar_from_dict(data: dict) -> Grammar:
    prods = []
    for entry in data["productions"]:
        lhs = nonterminal(entry["lhs"])
        rhs = entry["rhs"]
        if isinstance(rhs, str):
            if len(rhs) != 1:
                raise ValueError(f"unary rhs must be a single character, got {rhs!r}")
            prods.append(Production(lhs, (terminal(rhs),)))
        else:
            if len(rhs) != 2:
                raise ValueError("binary rhs must name exactly two nonterminals")
            prods.append(Production(lhs, tuple(nonterminal(name) for name in rhs)))
    return Grammar(prods, nonterminal(data["start"]))


def grammar_from_json(text: str) -> Grammar:
    return grammar_from_dict(json.loads(text))

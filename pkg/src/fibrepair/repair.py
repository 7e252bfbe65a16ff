"""RePair with pluggable tie-breaking, exhaustive enumeration of every
RePair grammar up to renaming, and the F/P/Q strategy graph.

RePair runs in three stages: lift each terminal to a unary nonterminal,
repeatedly replace every non-overlapping occurrence of a most frequent bigram
with a fresh nonterminal while some bigram occurs at least twice, then fold
what remains into binary rules.  A deterministic policy picks one bigram per
round; the enumerator branches on every most-frequent bigram and on every
bracketing of the final sequence, pruning states already seen up to renaming.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .grammar import Grammar, Production, canonicalize
from .words import Symbol, Word, as_word, is_terminal, nonterminal, symbol_name

Bigram = tuple  # (Symbol, Symbol)


def count_nonoverlapping(w, bigram) -> int:
    """Maximum number of pairwise non-overlapping occurrences of the bigram.

    Greedy left-to-right counting attains the maximum; for a doubled symbol
    each maximal run of length r contributes r // 2.
    """
    word = as_word(w)
    if len(word) < 2:
        raise ValueError("need a word of length at least 2")
    x, y = bigram
    count = 0
    i = 0
    last = len(word) - 1
    while i < last:
        if word[i] == x and word[i + 1] == y:
            count += 1
            i += 2
        else:
            i += 1
    return count


def _bigram_counts(word: Word) -> dict:
    """Non-overlapping occurrence count for every bigram present in word."""
    positions: dict = {}
    for i in range(len(word) - 1):
        positions.setdefault((word[i], word[i + 1]), []).append(i)
    counts = {}
    for bigram, pos in positions.items():
        last = -2
        n = 0
        for p in pos:
            if p > last + 1:
                n += 1
                last = p
        counts[bigram] = n
    return counts


def most_frequent_bigrams(w) -> set:
    """All bigrams attaining the maximum non-overlapping count."""
    word = as_word(w)
    if len(word) < 2:
        raise ValueError("need a word of length at least 2")
    counts = _bigram_counts(word)
    best = max(counts.values())
    return {bg for bg, n in counts.items() if n == best}


def replace_all(w, bigram, fresh: Symbol) -> Word:
    """Replace every non-overlapping occurrence, scanning left to right."""
    word = as_word(w)
    if fresh in word:
        raise ValueError(f"fresh symbol {symbol_name(fresh)} already occurs")
    x, y = bigram
    out = []
    i = 0
    n = len(word)
    while i < n:
        if i + 1 < n and word[i] == x and word[i + 1] == y:
            out.append(fresh)
            i += 2
        else:
            out.append(word[i])
            i += 1
    return Word(out)


def _pick_first(word: Word, candidates: set):
    """The candidate whose first occurrence in the word is earliest."""
    for i in range(len(word) - 1):
        bg = (word[i], word[i + 1])
        if bg in candidates:
            return bg
    raise ValueError("no candidate occurs in the word")


def _pick_lex(word: Word, candidates: set):
    """The candidate with the smallest symbol-id pair."""
    return min(candidates)


POLICIES = {"first": _pick_first, "lex": _pick_lex}


@dataclass(frozen=True)
class TraceStep:
    bigram: Bigram
    fresh: Symbol
    before: Word
    after: Word


@dataclass(frozen=True)
class ReplacementTrace:
    """Everything RePair did: the terminal lift, each replacement round, and
    the final fold.  The productions read off the trace form the grammar."""

    terminal_rules: tuple
    initial: Word
    steps: tuple
    final_sequence: Word
    final_rules: tuple
    start: Symbol

    def to_grammar(self) -> Grammar:
        prods = list(self.terminal_rules)
        prods.extend(Production(s.fresh, s.bigram) for s in self.steps)
        prods.extend(self.final_rules)
        return Grammar(prods, self.start)

    def format(self) -> str:
        lines = []
        for s in self.steps:
            pair = symbol_name(s.bigram[0]) + symbol_name(s.bigram[1])
            lines.append(f"{s.before} --[{pair}->{symbol_name(s.fresh)}]--> {s.after}")
        return "\n".join(lines)


def _terminal_lift(word: Word):
    lift: dict = {}
    rules = []
    for sym in word:
        if sym not in lift:
            fresh = nonterminal()
            lift[sym] = fresh
            rules.append(Production(fresh, (sym,)))
    return tuple(rules), Word(lift[s] for s in word)


def _left_fold(seq: Word):
    rules = []
    acc = seq[0]
    for sym in seq[1:]:
        fresh = nonterminal()
        rules.append(Production(fresh, (acc, sym)))
        acc = fresh
    return tuple(rules), acc


def repair_traced(w, policy="first"):
    """Run RePair under a deterministic tie-break; returns (grammar, trace)."""
    word = as_word(w)
    if not word:
        raise ValueError("cannot compress the empty word")
    if any(not is_terminal(s) for s in word):
        raise ValueError("input must be over terminal symbols")
    pick = POLICIES[policy] if isinstance(policy, str) else policy
    terminal_rules, current = _terminal_lift(word)
    initial = current
    steps = []
    while len(current) >= 2:
        counts = _bigram_counts(current)
        best = max(counts.values())
        if best < 2:
            break
        candidates = {bg for bg, n in counts.items() if n == best}
        bigram = pick(current, candidates)
        fresh = nonterminal()
        after = replace_all(current, bigram, fresh)
        steps.append(TraceStep(bigram, fresh, current, after))
        current = after
    final_rules, start = _left_fold(current)
    trace = ReplacementTrace(
        terminal_rules, initial, tuple(steps), current, final_rules, start
    )
    return trace.to_grammar(), trace


def repair(w, policy="first") -> Grammar:
    """The RePair grammar under a deterministic tie-break policy."""
    g, _ = repair_traced(w, policy)
    return g


# Renaming-invariant interning of derivation shapes, shared across calls:
# a terminal is ("t", symbol), a binary symbol is the pair of its children's
# shape ids.  Two enumeration branches that differ only in symbol naming give
# their words identical shape-id tuples.
_SHAPES: dict = {}


def _shape_id(key) -> int:
    sid = _SHAPES.get(key)
    if sid is None:
        sid = len(_SHAPES)
        _SHAPES[key] = sid
    return sid


_MAX_FOLD_LENGTH = 12


def _all_folds(seq: tuple):
    """Every bracketing of seq into binary rules; yields (root, rules)."""
    if len(seq) == 1:
        yield seq[0], ()
        return
    for cut in range(1, len(seq)):
        for left_root, left_rules in _all_folds(seq[:cut]):
            for right_root, right_rules in _all_folds(seq[cut:]):
                fresh = nonterminal()
                rule = Production(fresh, (left_root, right_root))
                yield fresh, left_rules + right_rules + (rule,)


def enumerate_repair(w, budget: int = 10**5) -> set:
    """All RePair grammars of w up to renaming, as canonical grammars.

    Branches over every most-frequent bigram at every replacement round and
    over every bracketing of the final sequence.  budget caps the input
    length; a final sequence too long to bracket exhaustively is also refused.
    """
    word = as_word(w)
    if not word:
        raise ValueError("cannot compress the empty word")
    if any(not is_terminal(s) for s in word):
        raise ValueError("input must be over terminal symbols")
    if len(word) > budget:
        raise ResourceLimitError(
            f"input of length {len(word)} exceeds the enumeration budget {budget}"
        )

    terminal_rules, start_word = _terminal_lift(word)
    shapes = {p.lhs: _shape_id(("t", p.rhs[0])) for p in terminal_rules}
    results: set = set()
    visited: set = set()
    rules = list(terminal_rules)

    def walk(current: Word) -> None:
        key = tuple(shapes[s] for s in current)
        if key in visited:
            return
        visited.add(key)
        if len(current) >= 2:
            counts = _bigram_counts(current)
            best = max(counts.values())
            if best >= 2:
                candidates = sorted(bg for bg, n in counts.items() if n == best)
                for bigram in candidates:
                    fresh = nonterminal()
                    shapes[fresh] = _shape_id((shapes[bigram[0]], shapes[bigram[1]]))
                    rules.append(Production(fresh, bigram))
                    walk(replace_all(current, bigram, fresh))
                    rules.pop()
                    del shapes[fresh]
                return
        if len(current) > _MAX_FOLD_LENGTH:
            raise ResourceLimitError(
                f"final sequence of length {len(current)} is too long to "
                f"enumerate all bracketings"
            )
        for root, fold_rules in _all_folds(tuple(current)):
            g = Grammar(rules + list(fold_rules), root)
            results.add(canonicalize(g))

    walk(start_word)
    return results


@dataclass(frozen=True)
class StrategyGraph:
    """The replacement-strategy graph on the F/P/Q family for one order n.

    Vertices are family labels like "F7", "P3", "Q2"; each edge is one
    replace-all step.  The single source is F_n; the sinks are F4 and Q2.
    """

    n: int
    vertices: tuple
    edges: tuple

    @property
    def source(self) -> str:
        return f"F{self.n}"

    @property
    def sinks(self) -> tuple:
        outgoing = {u for u, _ in self.edges}
        return tuple(v for v in self.vertices if v not in outgoing)

    def successors(self, label: str) -> tuple:
        return tuple(v for u, v in self.edges if u == label)

    def path_count(self) -> int:
        """Number of distinct source-to-sink paths."""
        memo: dict = {}

        def count(label: str) -> int:
            if label not in memo:
                nxt = self.successors(label)
                memo[label] = 1 if not nxt else sum(count(v) for v in nxt)
            return memo[label]

        return count(self.source)

    def to_dot(self) -> str:
        f_row = [v for v in self.vertices if v.startswith("F")]
        pq_row = [v for v in self.vertices if not v.startswith("F")]
        lines = ["digraph strategy {", "  rankdir=LR;", '  node [fontname="Helvetica"];']
        lines.append("  { rank=same; " + "; ".join(f_row) + "; }")
        if pq_row:
            lines.append("  { rank=same; " + "; ".join(pq_row) + "; }")
        for u, v in self.edges:
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines)


def strategy_graph(n: int) -> StrategyGraph:
    """The strategy graph for F_n (n >= 6).

    Edges: F_i -> F_{i-1} (replace ab), F_{2i} -> P_i (replace ba),
    P_{i+1} -> Q_i (replace ab), and Q_i -> P_i (replace ab).
    """
    if n < 6:
        raise ValueError("the strategy graph is defined for n >= 6")
    half = n // 2
    vertices = [f"F{i}" for i in range(n, 3, -1)]
    vertices += [f"P{i}" for i in range(half, 2, -1)]
    vertices += [f"Q{i}" for i in range(half - 1, 1, -1)]
    edges = [(f"F{i}", f"F{i - 1}") for i in range(n, 4, -1)]
    edges += [(f"F{2 * i}", f"P{i}") for i in range(3, half + 1)]
    edges += [(f"P{i + 1}", f"Q{i}") for i in range(2, half)]
    edges += [(f"Q{i}", f"P{i}") for i in range(3, half)]
    return StrategyGraph(n, tuple(vertices), tuple(edges))

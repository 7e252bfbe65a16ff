"""Exact smallest-grammar computation by search over derivation-closed
substring sets.

A grammar of w in which every nonterminal derives a distinct string is, up to
renaming, a set M of substrings of w that contains w itself and every symbol
of w, such that each member of length >= 2 splits into two members; |M| is
the grammar size.  Smallest grammars always have distinct derivations
(merging two nonterminals with equal expansions shrinks the grammar), so the
minimum |M| over closed sets is exactly the smallest grammar size, and the
smallest grammars are exactly the per-member split assignments of the
minimum-size closed sets — at minimum size every assignment is fully
reachable, since dropping unreachable members would leave a smaller closed
set.  This reduction is cross-checked in the test suite against an
independent production-level search on all short binary words.

Two searches share this model.  The decision search adds members depth-first,
always resolving a longest member that cannot yet be split, branching over
the distinct sets of missing parts, pruned by an admissible length-closure
bound: the minimum number of *new lengths* needed before every unresolved
member's length is a sum of two present lengths.  It runs under iterative
deepening on |M| from the LZ lower bound, and only over caps strictly below
the best known upper bound — that bound is the size of a concrete grammar,
so refuting everything smaller already pins the minimum.  The enumeration
search then lists every closed set of the minimum size bottom-up: any closed
set admits a shortest-first composition order, so starting from the
characters it concatenates two present members at a time, visiting each set
once via a canonical order on the additions.
"""

from __future__ import annotations

import time
from functools import lru_cache
from itertools import product

from .errors import ResourceLimitError
from .factorize import grammar_lower_bound
from .grammar import Grammar, Production, canonicalize
from .repair import repair
from .words import Word, as_word, is_terminal, nonterminal

DEFAULT_SIZE_BUDGET = 60
DEFAULT_ENUMERATE_BUDGET = 40


class OracleBudgetError(ResourceLimitError):
    """The requested word is beyond the oracle's budget.

    Carries the bound bracket that is still known cheaply: lower is the LZ
    lower bound, upper the best known grammar size.
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


def _encode(word: Word):
    """Injective char rendering plus the char -> symbol decode map."""
    codes: dict = {}
    out = []
    for sym in word:
        ch = codes.get(sym)
        if ch is None:
            ch = chr(len(codes))
            codes[sym] = ch
        out.append(ch)
    return "".join(out), {ch: sym for sym, ch in codes.items()}


def _length_splits(t: int, present: frozenset) -> bool:
    return any(1 <= t - p and (t - p) in present for p in present)


@lru_cache(maxsize=1 << 17)
def _extra_lengths(present: frozenset, targets: frozenset) -> int:
    """Minimum count of new lengths making every target a sum of two present
    lengths, where each new length >= 2 becomes a target itself."""
    pending = frozenset(t for t in targets if not _length_splits(t, present))
    if not pending:
        return 0
    t = min(pending)
    candidates = {t - p for p in present if t - p >= 2}
    if t % 2 == 0:
        candidates.add(t // 2)
    best = None
    for d in sorted(candidates, reverse=True):
        grown = present | {d}
        nxt = (pending - {t}) | ({d} if d >= 2 else frozenset())
        total = 1 + _extra_lengths(grown, frozenset(nxt))
        if best is None or total < best:
            best = total
    return best


class _FoundClosed(Exception):
    def __init__(self, members: frozenset):
        self.members = members


def _has_split(u: str, members: set) -> bool:
    return any(u[:k] in members and u[k:] in members for k in range(1, len(u)))


def _search(s: str, cap: int, deadline: float | None) -> None:
    """Explore closed supersets of {chars, s} with at most cap members,
    raising _FoundClosed on the first complete closed set; returning plainly
    means no closed set of size <= cap exists."""
    members: set = set(s) | {s}
    if len(members) > cap:
        return
    visited: set = set()
    ticks = 0

    def walk() -> None:
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 256 == 0 and time.monotonic() > deadline:
            raise OracleBudgetError("oracle search ran past its deadline")
        key = frozenset(members)
        if key in visited:
            return
        visited.add(key)
        unresolved = [
            u for u in members if len(u) >= 2 and not _has_split(u, members)
        ]
        if not unresolved:
            raise _FoundClosed(key)
        lengths = frozenset(len(m) for m in members)
        targets = frozenset(len(u) for u in unresolved)
        extra = _extra_lengths(lengths, targets)
        if extra < 1:
            extra = 1
        if len(members) + extra > cap:
            return
        u = max(unresolved, key=lambda m: (len(m), m))
        needs = []
        seen_needs = set()
        for k in range(1, len(u)):
            parts = (u[:k], u[k:])
            need = frozenset(p for p in parts if p not in members)
            if need in seen_needs or not need:
                continue
            seen_needs.add(need)
            if len(members) + len(need) > cap:
                continue
            needs.append(need)

        def rank(need: frozenset):
            grown = lengths | {len(p) for p in need}
            remaining = (targets - {len(u)}) | {len(p) for p in need if len(p) >= 2}
            return (
                len(need) + _extra_lengths(grown, frozenset(remaining)),
                sorted(need),
            )

        needs.sort(key=rank)
        for need in needs:
            members.update(need)
            walk()
            members.difference_update(need)

    walk()


def _order(m: str) -> tuple:
    return (len(m), m)


def _closed_sets(s: str, cap: int, deadline: float | None) -> set:
    """All derivation-closed member sets of size exactly cap, bottom-up.

    Every member of a closed set of length >= 2 splits into two strictly
    shorter members, so any closed set can be composed shortest-first from
    the characters, two operands at a time.  The walk explores composition
    sequences in a normal form — each addition either uses the previous
    addition as an operand or follows it in the (length, text) order.  Any
    valid sequence rewrites into this form by repeatedly swapping adjacent
    independent out-of-order additions (each swap removes an inversion), so
    every closed set is reached.  The subject is the unique maximum of the
    order and concatenating past it is impossible, so it is always the last
    addition; a branch too short to double up to the subject in its remaining
    additions is dead.
    """
    chars = frozenset(s)
    k = cap - len(chars)
    if k < 0:
        return set()
    n = len(s)
    subs = {s[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    found: set = set()
    ticks = 0

    def walk(avail: frozenset, prev: str | None, left: int) -> None:
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 1024 == 0 and time.monotonic() > deadline:
            raise OracleBudgetError("oracle enumeration ran past its deadline")
        if left == 0:
            if s in avail:
                found.add(avail)
            return
        if max(len(x) for x in avail) << left < n:
            return
        candidates = set()
        for u in avail:
            for v in avail:
                t = u + v
                if t not in avail and t in subs:
                    candidates.add(t)
        if left == 1 and s not in avail:
            candidates &= {s}
        for t in sorted(candidates, key=_order, reverse=True):
            if prev is not None and _order(t) < _order(prev):
                uses_prev = (
                    t.startswith(prev) and t[len(prev) :] in avail
                ) or (t.endswith(prev) and t[: -len(prev)] in avail)
                if not uses_prev:
                    continue
            walk(avail | {t}, t, left - 1)

    walk(chars, None, k)
    return found


def _upper_bound(word: Word) -> int:
    trivial = len(set(word)) + max(len(word) - 1, 0)
    if len(word) <= 10**4 and all(is_terminal(s) for s in word):
        return min(trivial, repair(word).size)
    return trivial


def _check_budget(word: Word, budget: int) -> None:
    if not word:
        raise ValueError("the oracle needs a non-empty word")
    if len(word) > budget:
        raise OracleBudgetError(
            f"word of length {len(word)} exceeds the oracle budget of "
            f"{budget} symbols",
            lower=grammar_lower_bound(word),
            upper=_upper_bound(word),
        )


def smallest_size(w, budget: int = DEFAULT_SIZE_BUDGET, deadline: float | None = None) -> int:
    """The exact minimum SLP size for w.

    Iterative deepening between the LZ lower bound and the best known upper
    bound; each capped search is exact up to its cap, so the first cap that
    admits a closed set is the true minimum.  The upper bound is the size of
    a concrete grammar, so once every smaller cap is refuted it needs no
    search of its own.  deadline, if given, is a wall-clock budget in seconds.
    """
    word = as_word(w)
    _check_budget(word, budget)
    s, _ = _encode(word)
    lower = grammar_lower_bound(s)
    upper = _upper_bound(word)
    stop = time.monotonic() + deadline if deadline is not None else None
    for cap in range(lower, upper):
        try:
            _search(s, cap, deadline=stop)
        except _FoundClosed:
            return cap
        except OracleBudgetError as exc:
            exc.lower = cap
            exc.upper = upper
            raise
    return upper


def enumerate_smallest(
    w, budget: int = DEFAULT_ENUMERATE_BUDGET, deadline: float | None = None
) -> set:
    """All smallest grammars of w up to renaming, as canonical grammars."""
    word = as_word(w)
    _check_budget(word, budget)
    s, decode = _encode(word)
    stop = time.monotonic() + deadline if deadline is not None else None
    best = smallest_size(word, budget=budget, deadline=deadline)
    member_sets = _closed_sets(s, best, deadline=stop)
    grammars: set = set()
    for members in member_sets:
        grammars.update(_assignments(members, decode, s))
    return grammars


def _assignments(members: frozenset, decode: dict, subject: str):
    """Every grammar obtained by choosing one split per composite member."""
    order = sorted(members, key=lambda m: (len(m), m))
    name = {u: nonterminal() for u in order}
    prods = [Production(name[u], (decode[u],)) for u in order if len(u) == 1]
    composites = [u for u in order if len(u) >= 2]
    choices = []
    for u in composites:
        splits = [
            (u[:k], u[k:])
            for k in range(1, len(u))
            if u[:k] in members and u[k:] in members
        ]
        choices.append(splits)
    for combo in product(*choices):
        binary = [
            Production(name[u], (name[left], name[right]))
            for u, (left, right) in zip(composites, combo)
        ]
        yield canonicalize(Grammar(prods + binary, name[subject]))


def verify_lower_bound(w, budget: int = DEFAULT_SIZE_BUDGET) -> bool:
    """True iff the LZ lower bound holds against the exact smallest size."""
    word = as_word(w)
    return grammar_lower_bound(word) <= smallest_size(word, budget=budget)

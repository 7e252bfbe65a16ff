"""LZ, C, semi-greedy, and grammar-induced factorizations.

A factorization is stored as the tuple of phrase lengths over its subject
word.  The LZ rule is non-self-referential: each phrase is the longest prefix
of the remainder that occurs wholly inside the already-factorized prefix, and
a fresh symbol forms a phrase of length one.  The C rule instead requires the
phrase to occur twice in the prefix *including* the phrase itself, which
permits overlapping sources.  The semi-greedy factorization shifts each LZ
boundary one position left unless the phrase ending there has length one.

All engines work on an injective character rendering of the word, so words
containing nonterminals factorize exactly like plain text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .words import Word, as_word


@dataclass(frozen=True)
class Factorization:
    """Phrase lengths over a subject word; kind is one of lz / c / sg / g."""

    subject: Word
    lengths: tuple[int, ...]
    kind: str

    def __post_init__(self):
        if not self.lengths:
            raise ValueError("a factorization needs at least one phrase")
        if any(n < 1 for n in self.lengths):
            raise ValueError("phrases must be non-empty")
        if sum(self.lengths) != len(self.subject):
            raise ValueError("phrase lengths must tile the subject exactly")

    @property
    def size(self) -> int:
        return len(self.lengths)

    @property
    def phrases(self) -> tuple[Word, ...]:
        out = []
        pos = 0
        for n in self.lengths:
            out.append(self.subject[pos : pos + n])
            pos += n
        return tuple(out)

    @property
    def boundaries(self) -> tuple[int, ...]:
        """1-based end position of each phrase (the last equals |subject|)."""
        ends = []
        pos = 0
        for n in self.lengths:
            pos += n
            ends.append(pos)
        return tuple(ends)

    def to_text(self) -> str:
        return "|".join(str(p) for p in self.phrases)

    def to_json(self) -> str:
        return json.dumps({"phrases": [str(p) for p in self.phrases]})

    def __str__(self) -> str:
        return self.to_text()


def _as_text(word: Word) -> str:
    """Injective char rendering, assigning codepoints in first-occurrence order."""
    codes: dict = {}
    out = []
    for sym in word:
        ch = codes.get(sym)
        if ch is None:
            ch = chr(len(codes))
            codes[sym] = ch
        out.append(ch)
    return "".join(out)


def _lz_lengths(s: str) -> list[int]:
    """Phrase lengths of the LZ factorization of a character string.

    Longest-match lengths are found by doubling plus binary search over
    str.find, restricted so the source occurrence lies wholly inside the
    already-factorized prefix.
    """
    n = len(s)
    lengths = []
    i = 0
    while i < n:
        if s.find(s[i], 0, i) < 0:
            lengths.append(1)
            i += 1
            continue
        cap = min(i, n - i)
        lo, hi = 1, 2
        while hi <= cap and s.find(s[i : i + hi], 0, i) >= 0:
            lo = hi
            hi *= 2
        hi = min(hi, cap + 1)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if s.find(s[i : i + mid], 0, i) >= 0:
                lo = mid
            else:
                hi = mid
        lengths.append(lo)
        i += lo
    return lengths


def _c_lengths(s: str) -> list[int]:
    """Phrase lengths of the C factorization.

    A phrase of length m starting at i is valid iff a second occurrence starts
    at or before i-1, i.e. str.find succeeds within s[0 : i+m-1]; that earlier
    occurrence may overlap the phrase itself.
    """
    n = len(s)
    lengths = []
    i = 0
    while i < n:
        if s.find(s[i], 0, i) < 0:
            lengths.append(1)
            i += 1
            continue
        cap = n - i
        lo, hi = 1, 2
        while hi <= cap and s.find(s[i : i + hi], 0, i + hi - 1) >= 0:
            lo = hi
            hi *= 2
        hi = min(hi, cap + 1)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if s.find(s[i : i + mid], 0, i + mid - 1) >= 0:
                lo = mid
            else:
                hi = mid
        lengths.append(lo)
        i += lo
    return lengths


def _require_nonempty(word: Word) -> None:
    if not word:
        raise ValueError("cannot factorize the empty word")


def lz_factorize(w) -> Factorization:
    """The LZ factorization of w."""
    word = as_word(w)
    _require_nonempty(word)
    return Factorization(word, tuple(_lz_lengths(_as_text(word))), "lz")


def c_factorize(w) -> Factorization:
    """The C factorization of w (self-referential sources allowed)."""
    word = as_word(w)
    _require_nonempty(word)
    return Factorization(word, tuple(_c_lengths(_as_text(word))), "c")


def semi_greedy(w) -> Factorization:
    """LZ boundaries shifted left by one, except after length-1 phrases."""
    word = as_word(w)
    _require_nonempty(word)
    lz = _lz_lengths(_as_text(word))
    ends = []
    pos = 0
    for n in lz:
        pos += n
        ends.append(pos)
    for j in range(len(ends) - 1):
        if lz[j] >= 2:
            ends[j] -= 1
    lengths = []
    prev = 0
    for e in ends:
        lengths.append(e - prev)
        prev = e
    return Factorization(word, tuple(lengths), "sg")


def z(w) -> int:
    """The number of LZ phrases.

    Accepts a plain string as a fast path: the characters are then the symbols.
    """
    if isinstance(w, str):
        if not w:
            raise ValueError("cannot factorize the empty word")
        return len(_lz_lengths(w))
    word = as_word(w)
    _require_nonempty(word)
    return len(_lz_lengths(_as_text(word)))


def grammar_lower_bound(w) -> int:
    """z(w) - 1 + (number of distinct symbols): no grammar of w is smaller."""
    if isinstance(w, str):
        if not w:
            raise ValueError("cannot factorize the empty word")
        return len(_lz_lengths(w)) - 1 + len(set(w))
    word = as_word(w)
    _require_nonempty(word)
    return len(_lz_lengths(_as_text(word))) - 1 + len(set(word))

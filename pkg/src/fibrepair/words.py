"""Symbols, words, ordered alphabets, and the morphisms that generate the
Fibonacci word family.

Symbols are interned integers: terminals are non-negative and render as their
character; nonterminals are negative and render as X1, X2, ... in creation
order (or under an explicitly registered name).  Words are immutable symbol
tuples.  The generators produce the Fibonacci words F_i and their relatives
P_i and Q_i over an arbitrary ordered two-symbol alphabet, with memoization
per (order, alphabet) and a configurable length cap.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain
from typing import Iterable

from .errors import ResourceLimitError

Symbol = int

#: Refuse to materialize words longer than this unless the caller raises the cap.
DEFAULT_MAX_LENGTH = 10**7

_registry_lock = threading.Lock()
_terminal_ids: dict[str, Symbol] = {}
_terminal_chars: dict[Symbol, str] = {}
_nonterminal_ids: dict[str, Symbol] = {}
_nonterminal_names: dict[Symbol, str] = {}
_next_nonterminal = 0
_auto_name_index = 0


def terminal(ch: str) -> Symbol:
    """The interned terminal symbol for a single character."""
    if len(ch) != 1:
        raise ValueError(f"terminals are single characters, got {ch!r}")
    with _registry_lock:
        sym = _terminal_ids.get(ch)
        if sym is None:
            sym = len(_terminal_ids)
            _terminal_ids[ch] = sym
            _terminal_chars[sym] = ch
        return sym


def nonterminal(name: str | None = None) -> Symbol:
    """A nonterminal symbol.

    Without a name, returns a fresh symbol auto-named X1, X2, ... in creation
    order.  With a name, returns the symbol registered under that name,
    creating it on first use — so equal names always denote equal symbols.
    """
    global _next_nonterminal, _auto_name_index
    with _registry_lock:
        if name is not None:
            sym = _nonterminal_ids.get(name)
            if sym is not None:
                return sym
        else:
            while True:
                _auto_name_index += 1
                name = f"X{_auto_name_index}"
                if name not in _nonterminal_ids:
                    break
        _next_nonterminal -= 1
        sym = _next_nonterminal
        _nonterminal_ids[name] = sym
        _nonterminal_names[sym] = name
        return sym


def is_terminal(sym: Symbol) -> bool:
    return sym >= 0


def symbol_name(sym: Symbol) -> str:
    """Printable name: the character for terminals, the registered name otherwise."""
    if sym >= 0:
        return _terminal_chars[sym]
    return _nonterminal_names[sym]


class Word(tuple):
    """An immutable sequence of symbols.

    Behaves like a tuple; slicing and concatenation stay in Word, and str()
    renders symbol names back to text.
    """

    __slots__ = ()

    @classmethod
    def from_text(cls, text: str) -> "Word":
        return cls(terminal(ch) for ch in text)

    def __getitem__(self, index):
        result = tuple.__getitem__(self, index)
        if isinstance(index, slice):
            return Word(result)
        return result

    def __add__(self, other):
        return Word(tuple.__add__(self, other))

    def __mul__(self, n):
        return Word(tuple.__mul__(self, n))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "".join(symbol_name(s) for s in self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def as_word(value) -> Word:
    """Coerce a Word, text, or symbol iterable into a Word."""
    if isinstance(value, Word):
        return value
    if isinstance(value, str):
        return Word.from_text(value)
    return Word(value)


@dataclass(frozen=True)
class OrderedAlphabet:
    """An ordered pair of distinct symbols: the (a, b) of the superscripts."""

    first: Symbol
    second: Symbol

    def __post_init__(self):
        if self.first == self.second:
            raise ValueError("ordered alphabet needs two distinct symbols")

    @classmethod
    def of(cls, text: str) -> "OrderedAlphabet":
        if len(text) != 2:
            raise ValueError(f"expected exactly two characters, got {text!r}")
        return cls(terminal(text[0]), terminal(text[1]))

    def swapped(self) -> "OrderedAlphabet":
        return OrderedAlphabet(self.second, self.first)


#: The default (a, b) alphabet.
AB = OrderedAlphabet.of("ab")


@dataclass(frozen=True, eq=False)
class Morphism:
    """A symbol-wise substitution; images concatenate in order.

    With identity_default=True, symbols outside the declared domain map to
    themselves (the substitutions that rewrite a single symbol work that way);
    otherwise an unmapped symbol is a domain error.
    """

    rules: dict[Symbol, Word]
    identity_default: bool = False

    def __post_init__(self):
        for sym, image in self.rules.items():
            if len(image) == 0:
                raise ValueError(f"empty image for {symbol_name(sym)}")

    def image(self, sym: Symbol):
        img = self.rules.get(sym)
        if img is not None:
            return img
        if self.identity_default:
            return (sym,)
        raise ValueError(f"symbol {symbol_name(sym)} outside morphism domain")

    def __call__(self, w: Iterable[Symbol]) -> Word:
        return Word(chain.from_iterable(self.image(s) for s in w))


def apply_morphism(m: Morphism, w) -> Word:
    """m applied symbol-wise to w (so it distributes over concatenation)."""
    return m(as_word(w))


def fibonacci_morphism(ab: OrderedAlphabet = AB) -> Morphism:
    """a -> ab, b -> a."""
    a, b = ab.first, ab.second
    return Morphism({a: Word((a, b)), b: Word((a,))})


def p_morphism(ab: OrderedAlphabet = AB) -> Morphism:
    """a -> ab, b -> abb (generates the P words)."""
    a, b = ab.first, ab.second
    return Morphism({a: Word((a, b)), b: Word((a, b, b))})


def q_morphism(ab: OrderedAlphabet = AB) -> Morphism:
    """a -> aab, b -> ab (generates the Q words)."""
    a, b = ab.first, ab.second
    return Morphism({a: Word((a, a, b)), b: Word((a, b))})


def reverse_phi(target: Symbol, image) -> Morphism:
    """The substitution sending one symbol to a word and fixing all others."""
    img = as_word(image)
    if len(img) == 0:
        raise ValueError("substitution image must be non-empty")
    return Morphism({target: img}, identity_default=True)


def fib_number(i: int) -> int:
    """f_i with f_1 = f_2 = 1."""
    if i < 1:
        raise ValueError("order must be >= 1")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def _check_length(length: int, max_length: int) -> None:
    if length > max_length:
        raise ResourceLimitError(
            f"word of length {length} exceeds the cap of {max_length} symbols"
        )


@lru_cache(maxsize=None)
def _fib_word(i: int, first: Symbol, second: Symbol) -> Word:
    if i == 1:
        return Word((second,))
    if i == 2:
        return Word((first,))
    return _fib_word(i - 1, first, second) + _fib_word(i - 2, first, second)


def fib_word(i: int, ab: OrderedAlphabet = AB, max_length: int = DEFAULT_MAX_LENGTH) -> Word:
    """F_i over the given alphabet: F_1 = b, F_2 = a, F_i = F_{i-1} F_{i-2}."""
    if i < 1:
        raise ValueError("order must be >= 1")
    _check_length(fib_number(i), max_length)
    return _fib_word(i, ab.first, ab.second)


@lru_cache(maxsize=None)
def _p_word(i: int, first: Symbol, second: Symbol) -> Word:
    if i == 1:
        return Word((first,))
    pi = p_morphism(OrderedAlphabet(first, second))
    return pi(_p_word(i - 1, first, second))


def p_word(i: int, ab: OrderedAlphabet = AB, max_length: int = DEFAULT_MAX_LENGTH) -> Word:
    """P_i: the (i-1)-fold image of the first symbol under a -> ab, b -> abb."""
    if i < 1:
        raise ValueError("order must be >= 1")
    _check_length(fib_number(2 * i - 1), max_length)
    return _p_word(i, ab.first, ab.second)


@lru_cache(maxsize=None)
def _q_word(i: int, first: Symbol, second: Symbol) -> Word:
    if i == 1:
        return Word((first,))
    theta = q_morphism(OrderedAlphabet(first, second))
    return theta(_q_word(i - 1, first, second))


def q_word(i: int, ab: OrderedAlphabet = AB, max_length: int = DEFAULT_MAX_LENGTH) -> Word:
    """Q_i: the (i-1)-fold image of the first symbol under a -> aab, b -> ab."""
    if i < 1:
        raise ValueError("order must be >= 1")
    _check_length(fib_number(2 * i), max_length)
    return _q_word(i, ab.first, ab.second)


def right_rotation(w) -> Word:
    """Move the last symbol to the front."""
    word = as_word(w)
    if not word:
        raise ValueError("cannot rotate the empty word")
    return word[-1:] + word[:-1]


def reverse(w) -> Word:
    """Symbols in reverse order."""
    return Word(reversed(as_word(w)))

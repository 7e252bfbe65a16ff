"""Executable checks for the structural claims behind the toolkit.

Everything this package asserts about Fibonacci-family words — which bigrams
are most frequent, how their LZ and semi-greedy factorizations look phrase by
phrase, how replace-all steps move between the F/P/Q families, what the
census of RePair runs is, and why every other replacement strategy loses —
is re-stated here as a bounded, deterministic check.  Each check sweeps a
parameter range, stops at the first counterexample, and returns a
:class:`CheckReport` that records what was tested and what was seen.

Claim registry
--------------

Checks are addressed by short ids (run_suite accepts comma lists and shell
globs such as ``case*``):

=========  ===========================================================
id         statement checked
=========  ===========================================================
fact1      telescoping sums of odd- and even-indexed Fibonacci numbers
lemma1     most-frequent-bigram sets of F, P, and Q words
lemma2     the LZ factorization of F_n, phrase by phrase
lemma3     P_i and Q_i are right rotations of F_{2i-1} and F_{2i}
lemma4     the LZ factorization of P_i, phrase by phrase
lemma5     z(w) <= |gfact(G)| and |gfact(G)| - 1 + sigma_w <= |G|
           over a population of grammars
lemma6     the substitutions carrying P words to F and Q words, and
           their commutation identities
lemma7     sizes and census of all RePair runs on F_n, and the
           replace-all state graph behind them
obs1       replacing every ab turns F_i into F_{i-1} over (X, a)
cor1       the smallest grammar of F_n has size exactly n
cor2       replace-all identities between the F, P, and Q families
claim1     squared-Fibonacci-morphism commutation on random words
claim2     the semi-greedy factorization of F_n, phrase by phrase
thm1       z(w) - 1 + sigma_w lower-bounds the smallest grammar size
thm2       smallest grammars and RePair runs of F_n coincide as sets
case1..16  the sixteen replacement strategies that break the
           most-frequent-bigram rule all produce larger grammars
=========  ===========================================================

The sixteen strategy cases cover every (word family, bigram, all/not-all)
cell that deviates from RePair's choice: the deviant replacement R must keep
z(R) at or above the phrase-count threshold that makes the finished grammar
strictly larger than n.  ``mode="not-all"`` sweeps proper non-empty subsets
of the occurrence list — exhaustively while the subset count fits the
budget, by seeded uniform sampling beyond it.

Determinism: every randomized sweep seeds its generator from
``(seed, claim id)`` (cases add the order), so re-running one claim with the
recorded parameters reproduces its counterexample exactly.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fnmatch import fnmatchcase
from typing import Callable, Iterator

from .factorize import grammar_lower_bound, lz_factorize, semi_greedy, z
from .grammar import (
    Grammar,
    expand,
    from_recursive_fib,
    g_factorization,
    size,
)
from .oracle import enumerate_smallest, smallest_size
from .repair import (
    enumerate_repair,
    most_frequent_bigrams,
    repair,
    replace_all,
    strategy_graph,
)
from .words import (
    AB,
    OrderedAlphabet,
    Symbol,
    Word,
    as_word,
    fib_number,
    fib_word,
    fibonacci_morphism,
    nonterminal,
    p_morphism,
    p_word,
    q_morphism,
    q_word,
    reverse,
    reverse_phi,
    right_rotation,
    symbol_name,
)

# ---------------------------------------------------------------------------
# reports and configuration


@dataclass(frozen=True)
class CheckReport:
    """The outcome of one claim check."""

    claim_id: str
    description: str
    passed: bool
    params: dict
    observed: str
    counterexample: str | None = None
    rng: str | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim_id": self.claim_id,
                "description": self.description,
                "passed": self.passed,
                "params": self.params,
                "observed": self.observed,
                "counterexample": self.counterexample,
                "rng": self.rng,
            }
        )

    def format(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bits = ", ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{status}  {self.claim_id:<7} {self.observed}"
        if bits:
            line += f"  [{bits}]"
        if self.counterexample is not None:
            line += f"\n      counterexample: {self.counterexample}"
        return line


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs for run_suite; the defaults finish at interactive speed."""

    n_max: int = 12
    seed: int = 0
    samples: int = 10_000
    subset_cap: int = 2**20
    thm1_words: int = 1_000
    thm1_max_len: int = 12
    oracle_n_max: int = 7
    case_n_max: int | None = None
    grammar_population: int = 1_000

    @property
    def cases_up_to(self) -> int:
        return self.n_max if self.case_n_max is None else self.case_n_max

    def rng_for(self, claim_id: str) -> random.Random:
        return random.Random(f"{self.seed}:{claim_id}")

    def rng_label(self, claim_id: str) -> str:
        return f"mt19937/seed={self.seed}:{claim_id}"


def _report(
    claim_id: str,
    passed: bool,
    params: dict,
    observed: str,
    counterexample: str | None = None,
    rng: str | None = None,
) -> CheckReport:
    return CheckReport(
        claim_id, _CHECKS[claim_id][0], passed, params, observed, counterexample, rng
    )


# ---------------------------------------------------------------------------
# the sixteen deviant replacement strategies


@dataclass(frozen=True)
class StrategyCase:
    """One cell of the deviant-strategy table.

    family picks the row (F_both spans both parities of n; the deepest
    strategy-graph states P_{n//2} and Q_{n//2 - 1} stand in for the P and Q
    rows), bigram and mode pick the column, and min_order is the smallest n
    for which the cell is a genuine deviation (enough occurrences exist and
    the word is still mid-derivation).
    """

    id: int
    family: str  # "F_both" | "F_even" | "F_odd" | "P" | "Q"
    bigram: str  # two characters over ab
    mode: str  # "all" | "not-all"
    min_order: int


#: The deviant cells, by row: replacing ab everywhere (and ba everywhere on
#: even F and all of the P/Q ab cells) is RePair's own move, and bigrams
#: that never occur in a family leave no cell at all.
CASES: tuple[StrategyCase, ...] = (
    StrategyCase(1, "F_both", "ab", "not-all", 5),
    StrategyCase(2, "F_both", "aa", "all", 5),
    StrategyCase(3, "F_both", "aa", "not-all", 7),
    StrategyCase(4, "F_even", "ba", "not-all", 6),
    StrategyCase(5, "F_odd", "ba", "all", 5),
    StrategyCase(6, "F_odd", "ba", "not-all", 7),
    StrategyCase(7, "P", "ab", "not-all", 6),
    StrategyCase(8, "P", "ba", "all", 6),
    StrategyCase(9, "P", "ba", "not-all", 8),
    StrategyCase(10, "P", "bb", "all", 6),
    StrategyCase(11, "P", "bb", "not-all", 8),
    StrategyCase(12, "Q", "ab", "not-all", 8),
    StrategyCase(13, "Q", "ba", "all", 8),
    StrategyCase(14, "Q", "ba", "not-all", 8),
    StrategyCase(15, "Q", "aa", "all", 8),
    StrategyCase(16, "Q", "aa", "not-all", 8),
)

_FAMILY_TEXT = {
    "F_both": "F_n",
    "F_even": "F_n (even n)",
    "F_odd": "F_n (odd n)",
    "P": "P_i at i = n//2",
    "Q": "Q_j at j = n//2 - 1",
}

_THRESHOLD_TEXT = {"F": "n-1", "P": "2i-2", "Q": "2j-1"}


def _case_description(c: StrategyCase) -> str:
    thr = _THRESHOLD_TEXT[c.family[0]]
    which = "all" if c.mode == "all" else "some but not all"
    return (
        f"replacing {which} occurrences of {c.bigram} in {_FAMILY_TEXT[c.family]} "
        f"leaves z(R) >= {thr}"
    )


def replace_subset(w, bigram, occs, fresh: Symbol) -> Word:
    """Replace exactly the listed occurrences of the bigram with fresh.

    occs holds 1-based start positions (the convention of factorization
    boundaries and tree intervals); each must start an occurrence of the
    bigram, the occurrences must not overlap, and fresh must be absent
    from w.  Positions outside those rules are domain errors.
    """
    word = as_word(w)
    x, y = tuple(as_word(bigram)) if isinstance(bigram, str) else tuple(bigram)
    if fresh in word:
        raise ValueError(f"fresh symbol {symbol_name(fresh)} already occurs in the word")
    positions = sorted(occs)
    for p in positions:
        if p < 1 or p >= len(word) or word[p - 1] != x or word[p] != y:
            raise ValueError(f"position {p} does not start an occurrence of the bigram")
    for p, q in zip(positions, positions[1:]):
        if q - p < 2:
            raise ValueError(f"replacement positions {p} and {q} overlap")
    out: list[Symbol] = []
    prev = 0
    for p in positions:
        out.extend(word[prev : p - 1])
        out.append(fresh)
        prev = p + 1
    out.extend(word[prev:])
    return Word(out)


def _case_target(c: StrategyCase, n: int) -> tuple[str, int, str]:
    """The (word text, z threshold, state label) a case tests at order n."""
    if n < c.min_order:
        raise ValueError(f"case {c.id} needs order n >= {c.min_order}, got {n}")
    if c.family == "F_even" and n % 2:
        raise ValueError(f"case {c.id} applies to even orders only, got {n}")
    if c.family == "F_odd" and n % 2 == 0:
        raise ValueError(f"case {c.id} applies to odd orders only, got {n}")
    if c.family.startswith("F"):
        return str(fib_word(n)), n - 1, f"F{n}"
    if c.family == "P":
        i = n // 2
        return str(p_word(i)), 2 * i - 2, f"P{i}"
    j = n // 2 - 1
    return str(q_word(j)), 2 * j - 1, f"Q{j}"


def _apply_mask(s: str, occs: list[int], mask: int) -> str:
    """Replace the mask-selected occurrences (0-based starts) with X."""
    parts = []
    prev = 0
    for b, pos in enumerate(occs):
        if mask >> b & 1:
            parts.append(s[prev:pos])
            parts.append("X")
            prev = pos + 2
    parts.append(s[prev:])
    return "".join(parts)


def check_strategy_case(
    c: StrategyCase,
    n: int,
    mode_budget: int = 2**20,
    *,
    samples: int = 10_000,
    seed: int = 0,
) -> CheckReport:
    """Test one deviant strategy at one order.

    mode="all" replaces every occurrence and compares z(R) against the
    case's threshold (exactly, where the value is pinned).  mode="not-all"
    sweeps proper non-empty occurrence subsets: all of them while their
    count stays within mode_budget, otherwise `samples` uniform draws from
    the seeded generator.
    """
    if c.mode not in ("all", "not-all"):
        raise ValueError(f"unknown mode {c.mode!r}")
    s, threshold, label = _case_target(c, n)
    occs = [k for k in range(len(s) - 1) if s.startswith(c.bigram, k)]
    if not occs:
        raise ValueError(f"bigram {c.bigram} does not occur in {label}")
    # The family words contain no aaa and no bbb, so occurrences of any
    # bigram never overlap and every subset of them can be replaced at once.
    assert all(q - p >= 2 for p, q in zip(occs, occs[1:]))
    k = len(occs)
    rng_used: str | None = None
    if c.mode == "all":
        masks: Iterator[int] | range = iter(((1 << k) - 1,))
        exhaustive = True
    else:
        if k < 2:
            raise ValueError(f"mode 'not-all' needs at least two occurrences in {label}")
        total = (1 << k) - 2
        if total <= mode_budget:
            masks = range(1, (1 << k) - 1)
            exhaustive = True
        else:
            rng = random.Random(f"{seed}:case{c.id}:{n}")
            rng_used = f"mt19937/seed={seed}:case{c.id}:{n}"
            masks = (rng.randrange(1, (1 << k) - 1) for _ in range(samples))
            exhaustive = False
    z_min: int | None = None
    tested = 0
    bad: str | None = None
    for mask in masks:
        r = _apply_mask(s, occs, mask)
        zr = z(r)
        tested += 1
        if z_min is None or zr < z_min:
            z_min = zr
        if zr < threshold:
            chosen = [occs[b] + 1 for b in range(k) if mask >> b & 1]
            shown = r if len(r) <= 100 else r[:100] + "..."
            bad = (
                f"{label}, replace {c.bigram} at positions {chosen}: "
                f"z(R)={zr} < {threshold}; R={shown}"
            )
            break
    params = {
        "n": n,
        "target": label,
        "bigram": c.bigram,
        "mode": c.mode,
        "occurrences": k,
        "subsets": tested,
        "exhaustive": exhaustive,
    }
    observed = (
        f"z(R) >= {threshold} on {tested} "
        f"{'exhaustive' if exhaustive else 'sampled'} replacement"
        f"{'s' if tested != 1 else ''} (min z(R) = {z_min})"
    )
    return CheckReport(
        f"case{c.id}", _case_description(c), bad is None, params, observed, bad, rng_used
    )


def _case_orders(c: StrategyCase, n_max: int) -> list[int]:
    if c.family == "F_even":
        return [n for n in range(c.min_order, n_max + 1) if n % 2 == 0]
    if c.family == "F_odd":
        return [n for n in range(c.min_order, n_max + 1) if n % 2]
    if c.family == "F_both":
        return list(range(c.min_order, n_max + 1))
    # P and Q targets depend on n only through n//2: even orders already
    # reach every distinct target once.
    return [n for n in range(c.min_order, n_max + 1) if n % 2 == 0]


def _make_case_check(c: StrategyCase) -> Callable[[SuiteConfig], CheckReport]:
    def run(cfg: SuiteConfig) -> CheckReport:
        orders = _case_orders(c, cfg.cases_up_to)
        claim_id = f"case{c.id}"
        if not orders:
            return _report(
                claim_id,
                True,
                {"n": f"none <= {cfg.cases_up_to}"},
                f"no valid orders (the case starts at n = {c.min_order})",
            )
        sub: list[CheckReport] = []
        for n in orders:
            r = check_strategy_case(
                c, n, cfg.subset_cap, samples=cfg.samples, seed=cfg.seed
            )
            sub.append(r)
            if not r.passed:
                break
        failed = next((r for r in sub if not r.passed), None)
        targets = ",".join(r.params["target"] for r in sub)
        tested = sum(r.params["subsets"] for r in sub)
        params = {
            "n": f"{orders[0]}..{orders[-1]}",
            "targets": targets,
            "bigram": c.bigram,
            "mode": c.mode,
            "subsets": tested,
        }
        observed = (
            f"z(R) >= threshold on {tested} replacements across {targets}"
        )
        rng = next((r.rng for r in sub if r.rng), None)
        return _report(
            claim_id,
            failed is None,
            params,
            observed,
            failed.counterexample if failed else None,
            rng,
        )

    return run


# ---------------------------------------------------------------------------
# word- and factorization-level claims


def _bigram_text(bg: tuple) -> str:
    return "".join(symbol_name(s) for s in bg)


def _check_fact1(cfg: SuiteConfig) -> CheckReport:
    hi = max(2, cfg.n_max)
    bad = None
    for i in range(1, hi + 1):
        odd = sum(fib_number(2 * k - 1) for k in range(1, i + 1))
        even = sum(fib_number(2 * k) for k in range(1, i + 1))
        if odd != fib_number(2 * i):
            bad = f"i={i}: odd-index sum {odd} != f_{2 * i}"
            break
        if even != fib_number(2 * i + 1) - 1:
            bad = f"i={i}: even-index sum {even} != f_{2 * i + 1} - 1"
            break
        if odd + even != fib_number(2 * i + 2) - 1:
            bad = f"i={i}: full sum {odd + even} != f_{2 * i + 2} - 1"
            break
    return _report(
        "fact1",
        bad is None,
        {"i": f"1..{hi}"},
        "odd-index sums telescope to f_2i, even-index to f_(2i+1) - 1, "
        "full to f_(2i+2) - 1",
        bad,
    )


def _check_lemma1(cfg: SuiteConfig) -> CheckReport:
    ab = (AB.first, AB.second)
    ba = (AB.second, AB.first)
    half = max(2, cfg.n_max // 2)
    sweeps: list[tuple[str, Word, set]] = []
    for n in range(4, cfg.n_max + 1, 2):
        sweeps.append((f"F{n}", fib_word(n), {ab, ba}))
    for n in range(3, cfg.n_max + 1, 2):
        sweeps.append((f"F{n}", fib_word(n), {ab}))
    for i in range(2, half + 1):
        sweeps.append((f"P{i}", p_word(i), {ab}))
    for j in range(3, half + 1):
        sweeps.append((f"Q{j}", q_word(j), {ab}))
    bad = None
    for label, w, want in sweeps:
        got = most_frequent_bigrams(w)
        if got != want:
            got_text = sorted(_bigram_text(bg) for bg in got)
            bad = f"{label}: most frequent bigrams {got_text}"
            break
    return _report(
        "lemma1",
        bad is None,
        {"F": f"3..{cfg.n_max}", "P": f"2..{half}", "Q": f"3..{half}"},
        f"{len(sweeps)} words have exactly the expected most-frequent sets",
        bad,
    )


def _check_lemma2(cfg: SuiteConfig) -> CheckReport:
    bad = None
    for n in range(5, cfg.n_max + 1):
        got = [str(p) for p in lz_factorize(fib_word(n)).phrases]
        want = (
            ["a", "b", "a"]
            + [str(reverse(fib_word(i))) for i in range(4, n - 1)]
            + ["ab" if n % 2 else "ba"]
        )
        if got != want:
            bad = f"n={n}: LZ phrases {'|'.join(got)}"
            break
    return _report(
        "lemma2",
        bad is None,
        {"n": f"5..{cfg.n_max}"},
        "LZ(F_n) = (a, b, a, reverse(F_4), ..., reverse(F_(n-2)), ab|ba)",
        bad,
    )


def _check_lemma3(cfg: SuiteConfig) -> CheckReport:
    hi = max(1, cfg.n_max // 2)
    ba_alph = AB.swapped()
    bad = None
    for i in range(1, hi + 1):
        if p_word(i) != right_rotation(fib_word(2 * i - 1, ba_alph)):
            bad = f"P{i} is not the right rotation of F{2 * i - 1} over (b, a)"
            break
        if q_word(i) != right_rotation(fib_word(2 * i, AB)):
            bad = f"Q{i} is not the right rotation of F{2 * i}"
            break
    return _report(
        "lemma3",
        bad is None,
        {"i": f"1..{hi}"},
        "P_i = rot(F_(2i-1) over (b,a)) and Q_i = rot(F_2i)",
        bad,
    )


def _check_lemma4(cfg: SuiteConfig) -> CheckReport:
    hi = min(cfg.n_max, 12)
    ba_alph = AB.swapped()
    bad = None
    for i in range(2, hi + 1):
        phrases = lz_factorize(p_word(i)).phrases
        if len(phrases) != 2 * i - 2:
            bad = f"i={i}: {len(phrases)} phrases instead of {2 * i - 2}"
            break
        if str(phrases[-1]) != "b":
            bad = f"i={i}: last phrase {phrases[-1]} instead of b"
            break
        mismatch = next(
            (
                j
                for j in range(1, 2 * i - 2)
                if phrases[j - 1] != reverse(fib_word(j, ba_alph))
            ),
            None,
        )
        if mismatch is not None:
            bad = f"i={i}: phrase {mismatch} is {phrases[mismatch - 1]}"
            break
    return _report(
        "lemma4",
        bad is None,
        {"i": f"2..{hi}"},
        "LZ(P_i) = (reverse(F_1 over (b,a)), ..., reverse(F_(2i-3) over (b,a)), b)",
        bad,
    )


def _random_text(rng: random.Random, max_len: int, letters: str) -> str:
    return "".join(rng.choice(letters) for _ in range(rng.randint(1, max_len)))


def _grammar_population(cfg: SuiteConfig, rng: random.Random) -> Iterator[tuple[str, Grammar]]:
    """A deterministic stream of (origin, grammar) pairs to test bounds on."""
    count = 0
    for n in range(3, max(3, cfg.n_max) + 1):
        yield f"recursive F{n}", from_recursive_fib(n)
        count += 1
    for n in range(5, 10):
        census = sorted(enumerate_repair(fib_word(n)), key=Grammar.pretty)
        for g in census:
            yield f"RePair census of F{n}", g
            count += 1
    while count < cfg.grammar_population:
        text = _random_text(rng, 30, "abc"[: rng.choice((1, 2, 3))])
        yield f"repair({text!r})", repair(text)
        count += 1


def _check_lemma5(cfg: SuiteConfig) -> CheckReport:
    rng = cfg.rng_for("lemma5")
    bad = None
    count = 0
    for origin, g in _grammar_population(cfg, rng):
        w = expand(g)
        gf = g_factorization(g).size
        sigma = len(set(w))
        zw = z(w)
        if not (zw <= gf and gf - 1 + sigma <= size(g)):
            bad = f"{origin}: z={zw}, |gfact|={gf}, sigma={sigma}, |G|={size(g)}"
            break
        count += 1
    return _report(
        "lemma5",
        bad is None,
        {"grammars": count},
        f"z(w) <= |gfact(G)| and |gfact(G)|-1+sigma <= |G| for {count} grammars",
        bad,
        cfg.rng_label("lemma5"),
    )


def _check_lemma6(cfg: SuiteConfig) -> CheckReport:
    a, b = AB.first, AB.second
    psi1 = reverse_phi(b, Word((b, a)))  # b -> ba
    psi2 = reverse_phi(b, Word((a, b)))  # b -> ab
    psi3 = reverse_phi(a, Word((a, b)))  # a -> ab
    phi = fibonacci_morphism(AB)
    pi = p_morphism(AB)
    theta = q_morphism(AB)
    half = max(1, cfg.n_max // 2)
    bad = None
    for i in range(1, half + 1):
        if psi1(p_word(i)) != fib_word(2 * i):
            bad = f"psi_(b->ba)(P{i}) != F{2 * i}"
            break
        if psi2(p_word(i)) != q_word(i):
            bad = f"psi_(b->ab)(P{i}) != Q{i}"
            break
        if psi3(q_word(i)) != p_word(i + 1):
            bad = f"psi_(a->ab)(Q{i}) != P{i + 1}"
            break
    words = 200
    if bad is None:
        rng = cfg.rng_for("lemma6")
        for _ in range(words):
            x = Word.from_text(_random_text(rng, 24, "ab"))
            if phi(phi(psi1(x))) != psi1(pi(x)):
                bad = f"phi^2(psi1({x})) != psi1(pi({x}))"
                break
            if psi2(pi(x)) != theta(psi2(x)):
                bad = f"psi2(pi({x})) != theta(psi2({x}))"
                break
            if psi3(theta(x)) != pi(psi3(x)):
                bad = f"psi3(theta({x})) != pi(psi3({x}))"
                break
    return _report(
        "lemma6",
        bad is None,
        {"i": f"1..{half}", "random_words": words},
        "the three substitutions map P/Q words as stated and commute "
        "with phi^2, pi, and theta",
        bad,
        cfg.rng_label("lemma6"),
    )


# --- the replace-all state graph behind lemma7 -----------------------------


def _norm2(s: str) -> str | None:
    """Rename to letters a/b in first-occurrence order; None if not 2 letters."""
    letters = "".join(dict.fromkeys(s))
    if len(letters) != 2:
        return None
    return s.translate(str.maketrans(letters, "ab"))


def _family_labels(s: str) -> list[str]:
    """Every F/P/Q family member equal to s over its own two letters."""
    length = len(s)
    m = 1
    while fib_number(m) < length:
        m += 1
    if fib_number(m) != length:
        return []
    letters = "".join(dict.fromkeys(s))
    if len(letters) != 2:
        return []
    found = set()
    for pair in (letters, letters[::-1]):
        alph = OrderedAlphabet.of(pair)
        if str(fib_word(m, alph)) == s:
            found.add(f"F{m}")
        if m % 2 and str(p_word((m + 1) // 2, alph)) == s:
            found.add(f"P{(m + 1) // 2}")
        if m % 2 == 0 and str(q_word(m // 2, alph)) == s:
            found.add(f"Q{m // 2}")
    return sorted(found)


def _strategy_states_mismatch(n: int) -> str | None:
    """Explore every replace-most-frequent-bigram run on F_n.

    Each state is a two-letter word (normalized to a/b); each move replaces
    all occurrences of one most-frequent bigram, as long as the best count
    is at least 2.  Returns a message if any state fails to be the expected
    F/P/Q family member or the discovered graph differs from
    strategy_graph(n); None when everything matches.
    """
    start = str(fib_word(n))
    label_of: dict[str, str] = {start: f"F{n}"}
    if _family_labels(start) != [f"F{n}"]:
        return f"start state of order {n} not recognized"
    edges: set[tuple[str, str]] = set()
    sinks: set[str] = set()
    stack = [start]
    while stack:
        s = stack.pop()
        label = label_of[s]
        counts = {
            bg: s.count(bg)
            for bg in ("aa", "ab", "ba", "bb")
            if s.count(bg) > 0
        }
        best = max(counts.values())
        if best < 2:
            sinks.add(label)
            continue
        for bg, cnt in counts.items():
            if cnt != best:
                continue
            t = _norm2(s.replace(bg, "\x00"))
            if t is None:
                return f"{label}: replacing {bg} does not leave a two-letter word"
            labels = _family_labels(t)
            if len(labels) != 1:
                return (
                    f"{label}: replacing {bg} reaches a state matching "
                    f"{labels or 'no family member'}"
                )
            nxt = labels[0]
            edges.add((label, nxt))
            if t not in label_of:
                label_of[t] = nxt
                stack.append(t)
    graph = strategy_graph(n)
    if set(label_of.values()) != set(graph.vertices):
        return (
            f"n={n}: reachable states {sorted(set(label_of.values()))} != "
            f"graph vertices {sorted(graph.vertices)}"
        )
    if edges != set(graph.edges):
        extra = sorted(edges - set(graph.edges))
        missing = sorted(set(graph.edges) - edges)
        return f"n={n}: edge mismatch (extra {extra}, missing {missing})"
    if sinks != set(graph.sinks):
        return f"n={n}: sinks {sorted(sinks)} != {sorted(graph.sinks)}"
    return None


def _check_lemma7(cfg: SuiteConfig) -> CheckReport:
    bad = None
    censuses = []
    for n in range(6, cfg.n_max + 1):
        grammars = enumerate_repair(fib_word(n))
        want = 2 * (n // 2) - 2
        sizes = {size(g) for g in grammars}
        if sizes != {n}:
            bad = f"n={n}: grammar sizes {sorted(sizes)} instead of all {n}"
            break
        if len(grammars) != want:
            bad = f"n={n}: census {len(grammars)} instead of {want}"
            break
        mismatch = _strategy_states_mismatch(n)
        if mismatch is not None:
            bad = mismatch
            break
        if strategy_graph(n).path_count() != n // 2 - 1:
            bad = f"n={n}: {strategy_graph(n).path_count()} paths instead of {n // 2 - 1}"
            break
        censuses.append(len(grammars))
    return _report(
        "lemma7",
        bad is None,
        {"n": f"6..{cfg.n_max}"},
        f"every run has size n; censuses {censuses} match 2*(n//2)-2; "
        "the replace-all state graph equals strategy_graph(n)",
        bad,
    )


def _check_obs1(cfg: SuiteConfig) -> CheckReport:
    x = nonterminal("X")
    bad = None
    for i in range(3, cfg.n_max + 1):
        got = replace_all(fib_word(i), (AB.first, AB.second), x)
        if got != fib_word(i - 1, OrderedAlphabet(x, AB.first)):
            bad = f"i={i}: replacing ab gives {got!r}"
            break
    return _report(
        "obs1",
        bad is None,
        {"i": f"3..{cfg.n_max}"},
        "replacing every ab in F_i yields F_(i-1) over (X, a)",
        bad,
    )


def _check_cor1(cfg: SuiteConfig) -> CheckReport:
    bad = None
    for n in range(5, cfg.oracle_n_max + 1):
        got = smallest_size(fib_word(n))
        if got != n:
            bad = f"n={n}: oracle says g* = {got}"
            break
    if bad is None:
        for n in range(5, cfg.n_max + 1):
            lo = grammar_lower_bound(fib_word(n))
            hi = size(repair(fib_word(n)))
            if not (lo == n == hi):
                bad = f"n={n}: bracket [{lo}, {hi}] does not pinch to n"
                break
    return _report(
        "cor1",
        bad is None,
        {"oracle_n": f"5..{cfg.oracle_n_max}", "bracket_n": f"5..{cfg.n_max}"},
        "the oracle returns exactly n, and lower bound = RePair size = n",
        bad,
    )


def _check_cor2(cfg: SuiteConfig) -> CheckReport:
    x = nonterminal("X")
    ab = (AB.first, AB.second)
    ba = (AB.second, AB.first)
    a_x = OrderedAlphabet(AB.first, x)
    x_b = OrderedAlphabet(x, AB.second)
    hi = max(2, cfg.n_max // 2)
    bad = None
    for i in range(2, hi + 1):
        if replace_all(fib_word(2 * i), ba, x) != p_word(i, a_x):
            bad = f"replacing ba in F{2 * i} does not give P{i} over (a, X)"
            break
        if replace_all(q_word(i), ab, x) != p_word(i, a_x):
            bad = f"replacing ab in Q{i} does not give P{i} over (a, X)"
            break
        if replace_all(p_word(i + 1), ab, x) != q_word(i, x_b):
            bad = f"replacing ab in P{i + 1} does not give Q{i} over (X, b)"
            break
    return _report(
        "cor2",
        bad is None,
        {"i": f"2..{hi}"},
        "the three replace-all identities hold between F, P, and Q",
        bad,
    )


def _check_claim1(cfg: SuiteConfig) -> CheckReport:
    rng = cfg.rng_for("claim1")
    phi_ba = fibonacci_morphism(AB.swapped())
    phi_ab = fibonacci_morphism(AB)
    pi = p_morphism(AB)
    theta = q_morphism(AB)
    b_word = Word((AB.second,))
    ab_word = Word((AB.first, AB.second))
    words = 1000
    bad = None
    for _ in range(words):
        x = Word.from_text(_random_text(rng, 30, "ab"))
        if phi_ba(phi_ba(x)) + b_word != b_word + pi(x):
            bad = f"x={x}: phi_(b,a)^2(x).b != b.pi(x)"
            break
        if phi_ab(phi_ab(x)) + ab_word != ab_word + theta(x):
            bad = f"x={x}: phi_(a,b)^2(x).ab != ab.theta(x)"
            break
    return _report(
        "claim1",
        bad is None,
        {"random_words": words, "max_len": 30},
        "both squared-morphism commutation identities hold",
        bad,
        cfg.rng_label("claim1"),
    )


def _greedy_len(s: str, start: int) -> int:
    """Length of the greedy phrase at start (source wholly inside s[:start])."""
    if s.find(s[start], 0, start) < 0:
        return 1
    cap = min(start, len(s) - start)
    lo, hi = 1, 2
    while hi <= cap and s.find(s[start : start + hi], 0, start) >= 0:
        lo = hi
        hi *= 2
    hi = min(hi, cap + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if s.find(s[start : start + mid], 0, start) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def _check_claim2(cfg: SuiteConfig) -> CheckReport:
    bad = None
    for n in range(5, cfg.n_max + 1):
        w = fib_word(n)
        s = str(w)
        sg = semi_greedy(w)
        phrases = [str(p) for p in sg.phrases]
        ends = sg.boundaries
        if sg.size != n - 1:
            bad = f"n={n}: {sg.size} phrases instead of {n - 1}"
            break
        if phrases[:4] != ["a", "b", "a", "ab"]:
            bad = f"n={n}: starts {'|'.join(phrases[:4])}"
            break
        if n >= 6 and phrases[-1] != ("aba" if n % 2 == 0 else "aab"):
            bad = f"n={n}: last phrase {phrases[-1]}"
            break
        for i in range(5, n - 1):  # the i-th phrase, 1-based, up to n-2
            want = str(right_rotation(reverse(fib_word(i))))
            start = ends[i - 2]  # 0-based start of phrase i
            if phrases[i - 1] != want:
                bad = f"n={n}: phrase {i} is {phrases[i - 1]}, not rot(reverse(F{i}))"
                break
            if len(phrases[i - 1]) != _greedy_len(s, start):
                bad = f"n={n}: phrase {i} is not greedy"
                break
        if bad:
            break
        for t in range(1, n - 1):  # the t-th boundary, between phrases
            if t in (1, 3):
                continue
            pos = ends[t - 1]
            if s[pos - 1 : pos + 1] != "ba":
                bad = f"n={n}: boundary {t} splits {s[pos - 1 : pos + 1]}, not ba"
                break
        if bad:
            break
    return _report(
        "claim2",
        bad is None,
        {"n": f"5..{cfg.n_max}"},
        "SG(F_n) starts (a,b,a,ab); middle phrases are greedy rotations "
        "of reversed Fibonacci words; the last phrase and all boundaries "
        "behave as stated",
        bad,
    )


def _check_thm1(cfg: SuiteConfig) -> CheckReport:
    rng = cfg.rng_for("thm1")
    bad = None
    for _ in range(cfg.thm1_words):
        text = _random_text(rng, cfg.thm1_max_len, "abc"[: rng.choice((2, 3))])
        lo = grammar_lower_bound(text)
        g_star = smallest_size(text)
        if lo > g_star:
            bad = f"w={text!r}: lower bound {lo} > smallest size {g_star}"
            break
    return _report(
        "thm1",
        bad is None,
        {"random_words": cfg.thm1_words, "max_len": cfg.thm1_max_len},
        "z(w) - 1 + sigma_w <= g*(w) on every sampled word",
        bad,
        cfg.rng_label("thm1"),
    )


def _check_thm2(cfg: SuiteConfig) -> CheckReport:
    bad = None
    counts = []
    for n in range(5, cfg.oracle_n_max + 1):
        rp = enumerate_repair(fib_word(n))
        opt = enumerate_smallest(fib_word(n))
        if rp != opt:
            only_rp = len(rp - opt)
            only_opt = len(opt - rp)
            bad = (
                f"n={n}: {only_rp} grammars only in the RePair census, "
                f"{only_opt} only among the smallest"
            )
            break
        counts.append(len(rp))
    return _report(
        "thm2",
        bad is None,
        {"n": f"5..{cfg.oracle_n_max}"},
        f"smallest-grammar sets equal RePair censuses (sizes {counts})",
        bad,
    )


# ---------------------------------------------------------------------------
# registry and driver

_CHECKS: dict[str, tuple[str, Callable[[SuiteConfig], CheckReport]]] = {
    "fact1": (
        "sums of odd/even-indexed Fibonacci numbers telescope to f_2i, "
        "f_(2i+1)-1, and f_(2i+2)-1",
        _check_fact1,
    ),
    "lemma1": (
        "most-frequent bigrams: {ab, ba} for even F words; {ab} for odd F, P, Q words",
        _check_lemma1,
    ),
    "lemma2": (
        "LZ(F_n) is (a, b, a, reverse(F_4), ..., reverse(F_(n-2)), ab|ba)",
        _check_lemma2,
    ),
    "lemma3": (
        "P_i and Q_i are right rotations of F_(2i-1) (alphabet swapped) and F_2i",
        _check_lemma3,
    ),
    "lemma4": (
        "LZ(P_i) lists reversed swapped-alphabet Fibonacci words and ends with b",
        _check_lemma4,
    ),
    "lemma5": (
        "z(w) <= |gfact(G)| and |gfact(G)| - 1 + sigma_w <= |G| for every grammar",
        _check_lemma5,
    ),
    "lemma6": (
        "substitutions b->ba, b->ab, a->ab carry P/Q words across families "
        "and commute with the generating morphisms",
        _check_lemma6,
    ),
    "lemma7": (
        "all RePair runs on F_n have size n, census 2*(n//2)-2, and walk "
        "the F/P/Q strategy graph",
        _check_lemma7,
    ),
    "obs1": (
        "replacing every ab in F_i yields F_(i-1) over (X, a)",
        _check_obs1,
    ),
    "cor1": (
        "the smallest grammar size of F_n is exactly n",
        _check_cor1,
    ),
    "cor2": (
        "replace-all steps map F_2i -> P_i, Q_i -> P_i, and P_(i+1) -> Q_i",
        _check_cor2,
    ),
    "claim1": (
        "squared Fibonacci morphisms commute with pi and theta up to a "
        "one-sided marker",
        _check_claim1,
    ),
    "claim2": (
        "SG(F_n) starts (a,b,a,ab), continues with greedy rotated reversed "
        "Fibonacci words, and its boundaries split ba",
        _check_claim2,
    ),
    "thm1": (
        "z(w) - 1 + sigma_w <= g*(w) on random words",
        _check_thm1,
    ),
    "thm2": (
        "Opt(F_n) = RePair(F_n) as sets of canonical grammars",
        _check_thm2,
    ),
}

for _case in CASES:
    _CHECKS[f"case{_case.id}"] = (_case_description(_case), _make_case_check(_case))
del _case

#: All claim ids, in report order.
CLAIM_IDS: tuple[str, ...] = tuple(_CHECKS)

_ALIASES = {
    "theorem1": "thm1",
    "theorem2": "thm2",
    "observation1": "obs1",
    "corollary1": "cor1",
    "corollary2": "cor2",
}


def _select(claims) -> list[str]:
    """Resolve a selection (None, comma string, or iterable of ids/globs)."""
    if claims is None:
        return list(_CHECKS)
    if isinstance(claims, str):
        tokens = [t.strip() for t in claims.split(",") if t.strip()]
    else:
        tokens = [str(t) for t in claims]
    if not tokens:
        return list(_CHECKS)
    chosen: dict[str, None] = {}
    for token in tokens:
        t = _ALIASES.get(token.lower(), token.lower())
        if t in _CHECKS:
            chosen[t] = None
            continue
        base = t.split("-")[0]
        if base in _CHECKS:
            chosen[base] = None
            continue
        matches = [cid for cid in _CHECKS if fnmatchcase(cid, t)]
        if not matches:
            raise ValueError(f"unknown claim selector {token!r}")
        for cid in matches:
            chosen[cid] = None
    return [cid for cid in _CHECKS if cid in chosen]


def run_suite(claims=None, n_max: int = 12, seed: int = 0, **overrides) -> list[CheckReport]:
    """Run the selected claim checks and return reports in registry order.

    claims picks checks by id, alias, or glob (None runs everything); the
    remaining keyword arguments override SuiteConfig fields.  Given the same
    arguments the result — including any counterexample — is identical from
    run to run.
    """
    cfg = SuiteConfig(n_max=n_max, seed=seed, **overrides)
    return [_CHECKS[cid][1](cfg) for cid in _select(claims)]

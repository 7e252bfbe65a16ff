"""End-to-end acceptance gate.

Each test checks one headline guarantee of the toolkit at desk scale and
prints a single ``ACCEPTANCE <k> <name>: PASS`` line with the key numbers;
a failing guarantee surfaces as an ordinary test failure.  The two heavy
checks (the random-word lower bound and the strategy-deviation table) run
minutes, not hours; everything else is seconds.
"""

from __future__ import annotations

import io
import itertools
import time

from fibrepair import (
    enumerate_repair,
    enumerate_smallest,
    fib_word,
    grammar_lower_bound,
    repair,
    run_suite,
    smallest_size,
)
from fibrepair.cli import run

from naive import naive_smallest_size

TABLE = {
    "fib:1": "b",
    "fib:2": "a",
    "fib:3": "ab",
    "fib:4": "aba",
    "fib:5": "abaab",
    "fib:6": "abaababa",
    "fib:7": "abaababaabaab",
    "fib:8": "abaababaabaababaababa",
    "fib:9": "abaababaabaababaababaabaababaabaab",
    "fib:10": "abaababaabaababaababaabaababaabaababaababaabaababaababa",
    "p:1": "a",
    "p:2": "ab",
    "p:3": "ababb",
    "p:4": "ababbababbabb",
    "p:5": "ababbababbabbababbababbabbababbabb",
    "q:1": "a",
    "q:2": "aab",
    "q:3": "aabaabab",
    "q:4": "aabaababaabaababaabab",
    "q:5": "aabaababaabaababaababaabaababaabaababaababaabaababaabab",
}


def conclude(number: int, name: str, detail: str) -> None:
    print(f"ACCEPTANCE {number} {name}: PASS ({detail})")


def test_criterion_01_word_generation():
    t0 = time.monotonic()
    for spec, expected in TABLE.items():
        out = io.StringIO()
        assert run(["gen", spec], out=out, err=io.StringIO()) == 0
        assert out.getvalue() == expected + "\n", spec
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    conclude(1, "word_generation", f"{len(TABLE)} words byte-exact in {elapsed:.2f}s")


def test_criterion_02_oracle_fibonacci_sizes():
    t0 = time.monotonic()
    for n in range(5, 10):
        assert smallest_size(fib_word(n)) == n
    elapsed = time.monotonic() - t0
    assert elapsed <= 600.0
    for n in range(5, 26):
        assert grammar_lower_bound(fib_word(n)) == n
        assert repair(fib_word(n)).size == n
    stretch = smallest_size(fib_word(10))
    conclude(
        2,
        "oracle_fibonacci_sizes",
        f"exact sizes 5..9 in {elapsed:.2f}s; bounds pinch at n for 5..25; "
        f"stretch n=10 gives {stretch}",
    )


def test_criterion_03_repair_census():
    t0 = time.monotonic()
    censuses = []
    for n in range(6, 21):
        grammars = enumerate_repair(fib_word(n))
        assert {g.size for g in grammars} == {n}
        assert len(grammars) == 2 * (n // 2) - 2
        censuses.append(len(grammars))
    elapsed = time.monotonic() - t0
    assert elapsed <= 60.0
    conclude(3, "repair_census", f"censuses 6..20 = {censuses} in {elapsed:.2f}s")


def test_criterion_04_oracle_census_equality():
    t0 = time.monotonic()
    sizes = []
    for n in range(5, 10):
        smallest = enumerate_smallest(fib_word(n))
        assert smallest == enumerate_repair(fib_word(n))
        sizes.append(len(smallest))
    elapsed = time.monotonic() - t0
    assert elapsed <= 600.0
    conclude(
        4,
        "oracle_census_equality",
        f"smallest == repair censuses {sizes} for n=5..9 in {elapsed:.2f}s",
    )


def test_criterion_05_eight_symbol_census():
    t0 = time.monotonic()
    census = enumerate_repair("abaababa")
    elapsed = time.monotonic() - t0
    assert len(census) == 4
    assert elapsed < 1.0
    conclude(5, "eight_symbol_census", f"4 grammars in {elapsed:.2f}s")


def test_criterion_06_factorization_claims():
    t0 = time.monotonic()
    reports = run_suite(claims="lemma2,lemma4,claim2", n_max=25)
    elapsed = time.monotonic() - t0
    assert [r.claim_id for r in reports] == ["lemma2", "lemma4", "claim2"]
    for r in reports:
        assert r.passed, r.format()
    assert elapsed < 5.0
    conclude(6, "factorization_claims", f"3 checks to order 25 in {elapsed:.2f}s")


def test_criterion_07_grammar_factorization_bounds():
    report = run_suite(claims="lemma5")[0]
    assert report.passed, report.format()
    assert "1000 grammars" in report.observed
    conclude(7, "grammar_factorization_bounds", report.observed)


def test_criterion_08_random_word_lower_bound():
    t0 = time.monotonic()
    report = run_suite(claims="thm1", thm1_words=10**4, thm1_max_len=14)[0]
    elapsed = time.monotonic() - t0
    assert report.passed, report.format()
    assert elapsed <= 900.0
    conclude(
        8,
        "random_word_lower_bound",
        f"10000 words to length 14 in {elapsed:.1f}s ({report.rng})",
    )


def test_criterion_09_strategy_deviation_cases():
    reports = run_suite(claims="case*", case_n_max=16, samples=10**5, subset_cap=2**20)
    assert [r.claim_id for r in reports] == [f"case{i}" for i in range(1, 17)]
    for r in reports:
        assert r.passed, r.format()
    subsets = sum(int(r.params.get("subsets", 0)) for r in reports)
    conclude(
        9,
        "strategy_deviation_cases",
        f"16 cases to order 16, {subsets} replacements checked, zero violations",
    )


def test_criterion_10_independent_oracle_cross_check():
    t0 = time.monotonic()
    checked = 0
    for length in range(1, 9):
        for bits in itertools.product("ab", repeat=length):
            w = "".join(bits)
            assert smallest_size(w) == naive_smallest_size(w), w
            checked += 1
    elapsed = time.monotonic() - t0
    assert checked == 510
    assert elapsed <= 300.0
    conclude(
        10,
        "independent_oracle_cross_check",
        f"two oracles agree on all {checked} binary words to length 8 in {elapsed:.1f}s",
    )


def test_criterion_11_morphism_identities():
    t0 = time.monotonic()
    reports = run_suite(claims="lemma6,claim1,obs1,cor2,lemma3,fact1")
    elapsed = time.monotonic() - t0
    assert len(reports) == 6
    for r in reports:
        assert r.passed, r.format()
    assert elapsed < 5.0
    conclude(11, "morphism_identities", f"6 identity checks in {elapsed:.2f}s")

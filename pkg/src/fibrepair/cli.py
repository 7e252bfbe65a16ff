"""Command-line front end.

One executable, ``fibrepair``, exposing the toolkit: word generation,
RePair (single runs, traced runs, and the full tie-break census), the LZ /
C / semi-greedy / grammar-induced factorizations, the exact smallest-grammar
oracle, the replacement strategy graph, and the claim-check suite.

Words travel as UTF-8 text over single-character terminals; grammars travel
as JSON objects ``{"start": name, "productions": [{"lhs": name, "rhs":
"a" | [name, name]}, ...]}``.  Word arguments accept a small spec language:

=============  ====================================================
``fib:N``      the N-th Fibonacci word (``fib:N@xy`` renames a to x
               and b to y; likewise for p/q below)
``p:N``        the N-th P word
``q:N``        the N-th Q word
``file:PATH``  the contents of PATH (one trailing newline ignored)
``-``          standard input (same trailing-newline rule)
anything else  the literal word
=============  ====================================================

Exit codes: 0 success, 1 claim-check failure, 2 usage or malformed input,
3 resource budget exceeded (set FIBREPAIR_ORACLE_BUDGET to raise the
default oracle budget).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from .errors import ResourceLimitError
from .factorize import c_factorize, grammar_lower_bound, lz_factorize, semi_greedy
from .grammar import (
    Grammar,
    expand,
    grammar_from_json,
    grammar_to_dict,
    g_factorization,
    partial_derivation_tree,
    size,
    validate,
)
from .oracle import (
    DEFAULT_ENUMERATE_BUDGET,
    DEFAULT_SIZE_BUDGET,
    _upper_bound,
    enumerate_smallest,
    smallest_size,
)
from .repair import enumerate_repair, repair_traced
from .words import AB, OrderedAlphabet, Word, fib_word, p_word, q_word, symbol_name
from .verify import run_suite

_GENERATORS = {"fib": fib_word, "p": p_word, "q": q_word}


def _read_text(path: str) -> str:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return text.removesuffix("\n")


def _parse_word(spec: str) -> Word:
    """Resolve a word argument (generator spec, file, stdin, or literal)."""
    if spec == "-":
        return Word.from_text(_read_text("-"))
    head, colon, rest = spec.partition(":")
    if colon and head in _GENERATORS:
        num, at, alpha = rest.partition("@")
        try:
            n = int(num)
        except ValueError:
            raise ValueError(f"bad order {num!r} in word spec {spec!r}") from None
        ab = OrderedAlphabet.of(alpha) if at else AB
        return _GENERATORS[head](n, ab)
    if colon and head == "file":
        return Word.from_text(_read_text(rest))
    return Word.from_text(spec)


def _read_grammar(path: str) -> Grammar:
    try:
        g = grammar_from_json(_read_text(path))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed grammar JSON: {exc!r}") from None
    problem = validate(g)
    if problem is not None:
        raise ValueError(f"invalid grammar: {problem}")
    return g


def _print_factorization(fact, fmt: str) -> None:
    print(fact.to_json() if fmt == "json" else fact.to_text())


def _sorted_grammars(census) -> list[Grammar]:
    return sorted(census, key=Grammar.pretty)


# --- subcommand handlers ---------------------------------------------------


def _cmd_gen(args) -> int:
    print(_parse_word(args.word))
    return 0


def _cmd_factorize(args) -> int:
    engine = {"lz": lz_factorize, "cfact": c_factorize, "sg": semi_greedy}[args.engine]
    _print_factorization(engine(_parse_word(args.word)), args.format)
    return 0


def _cmd_repair(args) -> int:
    g, trace = repair_traced(_parse_word(args.word), policy=args.policy)
    if args.format == "json":
        payload = {"size": size(g), "grammar": grammar_to_dict(g)}
        if args.trace:
            payload["trace"] = [
                {
                    "bigram": symbol_name(s.bigram[0]) + symbol_name(s.bigram[1]),
                    "fresh": symbol_name(s.fresh),
                    "before": str(s.before),
                    "after": str(s.after),
                }
                for s in trace.steps
            ]
        print(json.dumps(payload))
    else:
        if args.trace and trace.steps:
            print(trace.format())
            print()
        print(g.pretty())
    return 0


def _cmd_repair_all(args) -> int:
    census = _sorted_grammars(enumerate_repair(_parse_word(args.word), budget=args.budget))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "count": len(census),
                    "grammars": [grammar_to_dict(g) for g in census],
                }
            )
        )
    else:
        print("\n\n".join(g.pretty() for g in census))
    return 0


def _cmd_gfact(args) -> int:
    g = _read_grammar(args.grammar)
    if args.format == "dot":
        print(partial_derivation_tree(g).to_dot())
    else:
        _print_factorization(g_factorization(g), args.format)
    return 0


def _cmd_expand(args) -> int:
    print(expand(_read_grammar(args.grammar)))
    return 0


def _cmd_oracle(args) -> int:
    word = _parse_word(args.word)
    budget = args.budget
    if budget is None:
        fallback = DEFAULT_ENUMERATE_BUDGET if args.enumerate else DEFAULT_SIZE_BUDGET
        budget = int(os.environ.get("FIBREPAIR_ORACLE_BUDGET", fallback))
    g_star = smallest_size(word, budget=budget)
    lower = grammar_lower_bound(word)
    upper = _upper_bound(word)
    grammars: list[Grammar] | None = None
    if args.enumerate:
        grammars = _sorted_grammars(enumerate_smallest(word, budget=budget))
    if args.format == "json":
        payload = {
            "g_star": g_star,
            "count": None if grammars is None else len(grammars),
            "lower_bound": lower,
            "upper_bound": upper,
        }
        if grammars is not None:
            payload["grammars"] = [grammar_to_dict(g) for g in grammars]
        print(json.dumps(payload))
    else:
        print(f"g* = {g_star}")
        print(f"lower bound = {lower}")
        print(f"upper bound = {upper}")
        if grammars is not None:
            print(f"count = {len(grammars)}")
            for g in grammars:
                print()
                print(g.pretty())
    return 0


def _cmd_graph(args) -> int:
    from .repair import strategy_graph

    graph = strategy_graph(args.n)
    if args.format == "text":
        for u, v in graph.edges:
            print(f"{u} -> {v}")
    else:
        print(graph.to_dot())
    return 0


def _cmd_verify(args) -> int:
    overrides = {}
    if args.samples is not None:
        overrides["samples"] = args.samples
    if args.subset_cap is not None:
        overrides["subset_cap"] = args.subset_cap
    if args.oracle_nmax is not None:
        overrides["oracle_n_max"] = args.oracle_nmax
    if args.thm1_words is not None:
        overrides["thm1_words"] = args.thm1_words
    if args.thm1_maxlen is not None:
        overrides["thm1_max_len"] = args.thm1_maxlen
    reports = run_suite(
        claims=args.claims, n_max=args.nmax, seed=args.seed, **overrides
    )
    for report in reports:
        print(report.to_json() if args.format == "jsonl" else report.format())
    return 0 if all(r.passed for r in reports) else 1


# --- parser ----------------------------------------------------------------


def _add_format(parser, choices=("text", "json"), default="text") -> None:
    parser.add_argument("--format", choices=choices, default=default)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibrepair",
        description="grammar compression toolkit for Fibonacci-family words",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_gen)

    for name, title in (
        ("lz", "LZ factorization"),
        ("cfact", "C factorization"),
        ("sg", "semi-greedy factorization"),
    ):
        p = sub.add_parser(name, help=f"print the {title} of a word")
        p.add_argument("word")
        _add_format(p)
        p.set_defaults(func=_cmd_factorize, engine=name)

    p = sub.add_parser("repair", help="run RePair under a tie-break policy")
    p.add_argument("word")
    p.add_argument("--policy", choices=("first", "lex"), default="first")
    p.add_argument("--trace", action="store_true", help="show replacement rounds")
    _add_format(p)
    p.set_defaults(func=_cmd_repair)

    p = sub.add_parser("repair-all", help="every RePair grammar over all tie-breaks")
    p.add_argument("word")
    p.add_argument("--budget", type=int, default=10**5, help="branch budget")
    _add_format(p)
    p.set_defaults(func=_cmd_repair_all)

    p = sub.add_parser("gfact", help="grammar-induced factorization of a grammar")
    p.add_argument("grammar", help="grammar JSON file, or - for stdin")
    _add_format(p, choices=("text", "json", "dot"))
    p.set_defaults(func=_cmd_gfact)

    p = sub.add_parser("expand", help="expand a grammar JSON back into its word")
    p.add_argument("grammar", help="grammar JSON file, or - for stdin")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("oracle", help="exact smallest-grammar size (and grammars)")
    p.add_argument("word")
    p.add_argument("--enumerate", action="store_true", help="list all smallest grammars")
    p.add_argument("--budget", type=int, default=None, help="max word length")
    _add_format(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("graph", help="the replacement strategy graph of order n")
    p.add_argument("n", type=int)
    _add_format(p, choices=("dot", "text"), default="dot")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("verify", help="run the claim-check suite")
    p.add_argument("--claims", help="comma list of claim ids or globs (default: all)")
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--subset-cap", type=int, default=None)
    p.add_argument("--oracle-nmax", type=int, default=None)
    p.add_argument("--thm1-words", type=int, default=None)
    p.add_argument("--thm1-maxlen", type=int, default=None)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None, out=None, err=None) -> int:
    """Parse argv and execute; returns the exit code without exiting."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = _parser().parse_args(argv)
            return args.func(args)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    except ResourceLimitError as exc:
        print(f"fibrepair: {exc}", file=err)
        return 3
    except (ValueError, OSError) as exc:
        print(f"fibrepair: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))

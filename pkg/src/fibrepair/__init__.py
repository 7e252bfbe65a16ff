"""Grammar-based compression toolkit for the Fibonacci word family.

The package builds Fibonacci words and their P/Q relatives, runs RePair
under every tie-break, factorizes words (LZ, C, semi-greedy, and the
grammar-induced factorization), computes exact smallest grammars by
exhaustive search at desk scale, and re-states the structural claims
connecting all of the above as runnable checks (see fibrepair.verify).
"""

from .errors import FibrepairError, ResourceLimitError
from .factorize import (
    Factorization,
    c_factorize,
    grammar_lower_bound,
    lz_factorize,
    semi_greedy,
    z,
)
from .grammar import (
    DerivationTree,
    Grammar,
    PTNode,
    PartialDerivationTree,
    Production,
    canonicalize,
    derivation_tree,
    equivalent,
    expand,
    expansion_lengths,
    from_recursive_fib,
    g_factorization,
    grammar_from_dict,
    grammar_from_json,
    grammar_to_dict,
    grammar_to_json,
    partial_derivation_tree,
    rhs_length_sum,
    size,
    validate,
)
from .oracle import (
    DEFAULT_ENUMERATE_BUDGET,
    DEFAULT_SIZE_BUDGET,
    OracleBudgetError,
    enumerate_smallest,
    smallest_size,
    verify_lower_bound,
)
from .repair import (
    POLICIES,
    ReplacementTrace,
    StrategyGraph,
    TraceStep,
    count_nonoverlapping,
    enumerate_repair,
    most_frequent_bigrams,
    repair,
    repair_traced,
    replace_all,
    strategy_graph,
)
from .verify import (
    CASES,
    CLAIM_IDS,
    CheckReport,
    StrategyCase,
    SuiteConfig,
    check_strategy_case,
    replace_subset,
    run_suite,
)
from .words import (
    AB,
    DEFAULT_MAX_LENGTH,
    Morphism,
    OrderedAlphabet,
    Symbol,
    Word,
    apply_morphism,
    as_word,
    fib_number,
    fib_word,
    fibonacci_morphism,
    is_terminal,
    nonterminal,
    p_morphism,
    p_word,
    q_morphism,
    q_word,
    reverse,
    reverse_phi,
    right_rotation,
    symbol_name,
    terminal,
)

__version__ = "0.1.0"

__all__ = [
    "AB",
    "CASES",
    "CLAIM_IDS",
    "CheckReport",
    "DEFAULT_ENUMERATE_BUDGET",
    "DEFAULT_MAX_LENGTH",
    "DEFAULT_SIZE_BUDGET",
    "DerivationTree",
    "Factorization",
    "FibrepairError",
    "Grammar",
    "Morphism",
    "OracleBudgetError",
    "OrderedAlphabet",
    "PTNode",
    "PartialDerivationTree",
    "POLICIES",
    "Production",
    "ReplacementTrace",
    "ResourceLimitError",
    "StrategyCase",
    "StrategyGraph",
    "SuiteConfig",
    "Symbol",
    "TraceStep",
    "Word",
    "apply_morphism",
    "as_word",
    "c_factorize",
    "canonicalize",
    "check_strategy_case",
    "count_nonoverlapping",
    "derivation_tree",
    "enumerate_repair",
    "enumerate_smallest",
    "equivalent",
    "expand",
    "expansion_lengths",
    "fib_number",
    "fib_word",
    "fibonacci_morphism",
    "from_recursive_fib",
    "g_factorization",
    "grammar_from_dict",
    "grammar_from_json",
    "grammar_lower_bound",
    "grammar_to_dict",
    "grammar_to_json",
    "is_terminal",
    "lz_factorize",
    "most_frequent_bigrams",
    "nonterminal",
    "p_morphism",
    "p_word",
    "partial_derivation_tree",
    "q_morphism",
    "q_word",
    "repair",
    "repair_traced",
    "replace_all",
    "replace_subset",
    "reverse",
    "reverse_phi",
    "rhs_length_sum",
    "right_rotation",
    "run_suite",
    "semi_greedy",
    "size",
    "smallest_size",
    "strategy_graph",
    "symbol_name",
    "terminal",
    "validate",
    "verify_lower_bound",
    "z",
]

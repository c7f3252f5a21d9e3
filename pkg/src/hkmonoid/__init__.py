"""Normal forms, word problem, normal-word automata and growth for Hecke-Kiselman monoids of oriented graphs."""

from .automaton import (
    ForbiddenPatternSet,
    GrowthReport,
    NormalWordDfa,
    build_normal_dfa,
    classify_growth,
    count_normal_words,
    enumerate_normal_words,
    growth_report,
    leading_term_language,
    minimal_forbidden_words,
    normal_dfa,
)
from .cycle import block_decompose, build_S, build_Sprime, enumerate_Sprime_rules, is_formp
from .digraph import (
    Digraph,
    DigraphError,
    cycle_graph,
    example_s4,
    has_two_connected_cycles,
    is_acyclic,
    parse_digraph,
    path_graph,
)
from .oracle import congruence_closure, crosscheck, enumerate_monoid
from .rewriting import (
    Match,
    RuleSystem,
    apply_match,
    check_local_confluence,
    equal_in_monoid,
    find_matches,
    is_reduced,
    normal_form,
    one_step_reducts,
    t_system,
)
from .words import Cmp, GenOrder, deglex_compare, format_word, parse_word

__version__ = "0.1.0"

"""Exact search and extremal constructions for star-critical Ramsey numbers r_*(C_n, K_m)."""

from .arrowing import (
    ArrowingVerdict,
    Inconclusive,
    SearchBudget,
    arrows,
    brute_force_arrows,
    compute_ramsey,
    compute_star_critical,
)
from .coloring import ColoringVerdict, HostSpec, TwoColoring, enumerate_colorings, host_graph, verify_coloring
from .constructions import (
    ConstructionParams,
    FormulaRangeError,
    RamseyValue,
    build_ramsey_critical,
    build_star_critical,
    ramsey_formula_cycle_clique,
    ramsey_formula_path_clique,
    star_critical_formula,
)
from .graph import (
    Graph,
    SearchBudgetExceeded,
    clique_number,
    complement,
    components,
    contains_cycle_of_length,
    contains_path_on,
    disjoint_union,
    find_clique,
    find_cycle,
    find_path,
    independence_number,
    induced,
    max_clique_at_least,
    min_degree,
)
from .graph6 import from_graph6, to_dot, to_graph6
from .lemmas import (
    LemmaReport,
    NearCycleInstance,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    find_clique_packing,
    generate_lemma4_family,
    run_lemma3_suite,
    run_lemma4_suite,
)

__version__ = "0.1.0"

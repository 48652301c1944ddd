"""Exact tools for large low-dimension subposets of finite posets."""

from .bounds import (
    base_digits,
    build_corollary2_witness,
    corollary2_bound,
    exponent,
    goodwillie_lower_bound,
    optimal_m,
)
from .dimension import (
    BudgetExceeded,
    Realizer,
    dimension,
    has_dim_at_most,
    has_dim_at_most_2,
    incomparable_pairs,
    restrict_realizer,
    verify_realizer,
)
from .extremal import ExtremalResult, ex_star_max_dim, greedy_seed, verify_theorem1_instance
from .invariants import goodwillie_subposet, height, max_antichain, min_chain_cover, width
from .poset import (
    Poset,
    PosetError,
    antichain,
    boolean_lattice,
    chain,
    disjoint_union,
    from_cover_relations,
    induced,
    lex_power,
    lex_product,
    random_poset,
    standard_example,
)

__version__ = "0.1.0"

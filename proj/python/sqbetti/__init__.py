"""Betti tables, extremal corners, and realizability for squarefree strongly
stable monomial ideals."""

from ._core import (
    ContractError,
    Ideal,
    InfeasibleError,
    Monomial,
    NotStableError,
    ParseError,
    basic_monomials,
    bshad,
    chain_basic_monomials,
    classify,
    construct_ideal,
    count_strictly_above,
    count_upto,
    count_upto_traced,
    degree_sequence,
    enumerate_A,
    enumerate_corner_configs,
    extremal_betti,
    feasibility_bounds,
    gap_profile,
    graded_betti,
    joint,
    lex_corner_ideal,
    min_bshad,
    minimal_generators,
    next_in_A,
    oracle_position,
    parse_ideal,
    pascal_row,
    prev_in_A,
    render_betti,
    segment,
    shad_power,
    shadow,
    slex_cmp,
    strongly_stable_closure,
)

__all__ = [
    "ContractError",
    "Ideal",
    "InfeasibleError",
    "Monomial",
    "NotStableError",
    "ParseError",
    "basic_monomials",
    "bshad",
    "chain_basic_monomials",
    "classify",
    "construct_ideal",
    "count_strictly_above",
    "count_upto",
    "count_upto_traced",
    "degree_sequence",
    "enumerate_A",
    "enumerate_corner_configs",
    "extremal_betti",
    "feasibility_bounds",
    "gap_profile",
    "graded_betti",
    "joint",
    "lex_corner_ideal",
    "min_bshad",
    "minimal_generators",
    "next_in_A",
    "oracle_position",
    "parse_ideal",
    "pascal_row",
    "prev_in_A",
    "render_betti",
    "segment",
    "shad_power",
    "shadow",
    "slex_cmp",
    "strongly_stable_closure",
]

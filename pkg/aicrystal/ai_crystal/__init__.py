"""AI-crystal structure, characters, singular elements and low-rank tables."""

from aicrystal.ai_crystal.characters import (
    ai_contribution,
    ai_variables,
    ch_ai,
    odd_degrees,
    weight_multiplicities,
)
from aicrystal.ai_crystal.graph import ai_graph
from aicrystal.ai_crystal.low_rank import (
    LowRankTable,
    rank3_element,
    rank3_row_table,
    rank3_top,
    rank4_element,
    rank4_row_table,
    rank4_top,
    rank4_two_row_table,
)
from aicrystal.ai_crystal.singular import (
    expected_singular_set,
    is_singular,
    singular_elements,
    so_dimension,
    so_highest_weights,
    t_rho,
)
from aicrystal.ai_crystal.structure import (
    AITensor,
    ai_axiom_violations,
    ai_component,
    ai_generators,
    ai_tensor_btil,
    ai_tensor_deg,
    btil,
    deg,
    morphism_violations,
)

__all__ = [
    "AITensor",
    "LowRankTable",
    "ai_axiom_violations",
    "ai_component",
    "ai_contribution",
    "ai_generators",
    "ai_graph",
    "ai_tensor_btil",
    "ai_tensor_deg",
    "ai_variables",
    "btil",
    "ch_ai",
    "deg",
    "expected_singular_set",
    "is_singular",
    "morphism_violations",
    "odd_degrees",
    "rank3_element",
    "rank3_row_table",
    "rank3_top",
    "rank4_element",
    "rank4_row_table",
    "rank4_top",
    "rank4_two_row_table",
    "singular_elements",
    "so_dimension",
    "so_highest_weights",
    "t_rho",
    "weight_multiplicities",
]

"""K-matrix complementation, K1, AI-tableaux and standardization."""

from aicrystal.kmatrix.columns import (
    column_btil,
    column_deg,
    column_of,
    column_tableau,
    k_column,
    k_tensor,
)
from aicrystal.kmatrix.standardization import (
    enumerate_sst_ai,
    is_ai_tableau,
    k1,
    k_complement,
    require_rank_shape,
    std,
    std_rows,
)

__all__ = [
    "column_btil",
    "column_deg",
    "column_of",
    "column_tableau",
    "enumerate_sst_ai",
    "is_ai_tableau",
    "k1",
    "k_column",
    "k_complement",
    "k_tensor",
    "require_rank_shape",
    "std",
    "std_rows",
]

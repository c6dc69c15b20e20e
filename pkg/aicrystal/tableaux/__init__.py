"""Partitions, Young tableaux, Schensted insertion and the RS correspondence."""

from aicrystal.tableaux.columns import (
    ColumnPairConditions,
    column_pair_conditions,
    juxtapose,
)
from aicrystal.tableaux.enumeration import enumerate_ssyt, enumerate_standard
from aicrystal.tableaux.insertion import (
    column_reading,
    p_symbol,
    p_symbol_tensor,
    reverse_insert,
    row_insert,
    rs,
)
from aicrystal.tableaux.partitions import covers, partitions_of, partitions_up_to

__all__ = [
    "ColumnPairConditions",
    "column_pair_conditions",
    "column_reading",
    "covers",
    "enumerate_ssyt",
    "enumerate_standard",
    "juxtapose",
    "p_symbol",
    "p_symbol_tensor",
    "partitions_of",
    "partitions_up_to",
    "reverse_insert",
    "row_insert",
    "rs",
]

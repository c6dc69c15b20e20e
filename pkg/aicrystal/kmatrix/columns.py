"""Closed forms on single columns u_{j1..jk} and the K ⊗ 1 map."""

from __future__ import annotations

from collections.abc import Sequence

from aicrystal.ai_crystal.structure import AITensor
from aicrystal.errors import ColumnError
from aicrystal.kmatrix.standardization import k_complement
from aicrystal.models import Tableau, tableau_of


def column_tableau(column: Sequence[int], n: int) -> Tableau:
    return tableau_of(n, tuple((x,) for x in column))


def column_of(t: Tableau) -> tuple[int, ...]:
    if any(len(row) != 1 for row in t.rows):
        raise ColumnError(f"tableau {t.label} is not a single column")
    return tuple(row[0] for row in t.rows)


def column_deg(column: Sequence[int], i: int) -> int:
    """1 when exactly one of i, i+1 is in the column, else 0."""
    return int((i in column) != (i + 1 in column))


def column_btil(column: Sequence[int], i: int) -> tuple[int, ...] | None:
    """Swap the one of i, i+1 that is present; absent when both or neither are."""
    has_low, has_high = i in column, i + 1 in column
    if has_low == has_high:
        return None
    old, new = (i + 1, i) if has_high else (i, i + 1)
    return tuple(new if x == old else x for x in column)


def k_column(t: Tableau) -> Tableau:
    """K^{(k)} on a column tableau of height k."""
    return column_tableau(k_complement(column_of(t), t.n), t.n)


def k_tensor(b: AITensor) -> AITensor:
    """K ⊗ 1: complement the column in the left factor."""
    return AITensor(k_column(b.left), b.right)

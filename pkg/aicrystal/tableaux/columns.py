"""Pairs of columns: when P(C1 ⊗ C2) is the juxtaposition C1C2."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from aicrystal.errors import ColumnError
from aicrystal.models import Rows
from aicrystal.tableaux.insertion import p_rows


@dataclass(frozen=True)
class ColumnPairConditions:
    """The three equivalent conditions for C1 (height k) and C2 (height l)."""

    product_length: int
    length_is_k: bool
    entrywise: bool
    juxtaposed: bool

    @property
    def equivalent(self) -> bool:
        return self.length_is_k == self.entrywise == self.juxtaposed


def _check_column(column: Sequence[int], n: int) -> tuple[int, ...]:
    column = tuple(column)
    if any(not 1 <= x <= n for x in column) or any(a >= b for a, b in zip(column, column[1:])):
        raise ColumnError(f"{column} is not a strictly increasing column over [1, {n}]")
    return column


def juxtapose(c1: Sequence[int], c2: Sequence[int]) -> Rows:
    """C1C2 as rows: C2 placed to the right of C1, top-aligned; needs len(C1) >= len(C2)."""
    if len(c2) > len(c1):
        raise ColumnError(f"C2 = {tuple(c2)} is taller than C1 = {tuple(c1)}")
    rows = [[x] for x in c1]
    for r, y in enumerate(c2):
        rows[r].append(y)
    return tuple(tuple(row) for row in rows)


def column_pair_conditions(
    c1: Sequence[int], c2: Sequence[int], n: int
) -> ColumnPairConditions:
    c1, c2 = _check_column(c1, n), _check_column(c2, n)
    if not c1:
        raise ColumnError("C1 must have at least one entry")
    k, l = len(c1), len(c2)
    product = p_rows(tuple(reversed(c1)) + tuple(reversed(c2)))
    return ColumnPairConditions(
        product_length=len(product),
        length_is_k=len(product) == k,
        entrywise=k >= l and all(c1[r] <= c2[r] for r in range(l)),
        juxtaposed=k >= l and product == juxtapose(c1, c2),
    )

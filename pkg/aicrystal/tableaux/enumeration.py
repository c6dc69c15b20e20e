"""Enumeration of SST_n(lambda) and STab(lambda) in canonical order.

Canonical order is lexicographic on the row-reading word; the backtracking
below fills cells in row-major order with increasing values, which yields
exactly that order.
"""

from __future__ import annotations

from functools import lru_cache

from aicrystal.models import Partition, Rows, Tableau, tableau_of


@lru_cache(maxsize=None)
def _ssyt_rows(n: int, parts: tuple[int, ...]) -> tuple[Rows, ...]:
    if len(parts) > n:
        return ()
    heights = Partition.model_construct(parts=parts).column_lengths
    grid = [[0] * p for p in parts]
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    found: list[Rows] = []

    def fill(k: int) -> None:
        if k == len(cells):
            found.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[k]
        low = grid[i][j - 1] if j > 0 else 1
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        high = n - (heights[j] - 1 - i)  # room for the strictly larger entries below
        for v in range(low, high + 1):
            grid[i][j] = v
            fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return tuple(found)


def enumerate_ssyt(n: int, lm: Partition) -> tuple[Tableau, ...]:
    """All semistandard tableaux of shape ``lm`` over [1, n]."""
    return tuple(tableau_of(n, rows) for rows in _ssyt_rows(n, lm.parts))


def enumerate_standard(lm: Partition) -> tuple[Tableau, ...]:
    """Standard tableaux of shape ``lm`` on [1, |lm|]."""
    return tuple(t for t in enumerate_ssyt(lm.size, lm) if t.is_standard())

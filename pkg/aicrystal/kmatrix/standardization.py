"""K-matrix complementation, K1, the AI-condition and standardization.

    K1(T) = P(K(C1) ⊗ C2 ⊗ ... ⊗ C_{lambda_1})
    std(T) = K1^r(T) for the least r making it an AI-tableau
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

from aicrystal.errors import ColumnError, NotSemistandardError, ShapeError, StandardizationError
from aicrystal.log import get_logger
from aicrystal.models import Partition, Rows, Tableau, so_rank, tableau_of
from aicrystal.tableaux.enumeration import enumerate_ssyt
from aicrystal.tableaux.insertion import p_rows

logger = get_logger(__name__)


def k_complement(column: Sequence[int], n: int) -> tuple[int, ...]:
    """K^{(k)}: the sorted complement [1, n] \\ column."""
    column = tuple(column)
    if any(not 1 <= x <= n for x in column) or any(a >= b for a, b in zip(column, column[1:])):
        raise ColumnError(f"{column} is not a strictly increasing column over [1, {n}]")
    taken = set(column)
    return tuple(x for x in range(1, n + 1) if x not in taken)


def _columns(rows: Rows) -> Rows:
    if not rows:
        return ()
    return tuple(
        tuple(row[j] for row in rows if len(row) > j) for j in range(len(rows[0]))
    )


def _k1_rows(n: int, rows: Rows) -> Rows:
    cols = _columns(rows)
    first = cols[0] if cols else ()
    letters = list(reversed(k_complement(first, n)))
    for col in cols[1:]:
        letters.extend(reversed(col))
    return p_rows(letters)


def _is_ai_rows(n: int, rows: Rows) -> bool:
    if not rows:
        return True
    m = so_rank(n)
    if len(rows) > m:
        return False
    first = tuple(row[0] for row in rows)
    second = tuple(row[1] for row in rows if len(row) > 1)
    comp = k_complement(first, n)
    return all(comp[r] <= second[r] for r in range(len(second)))


def k1(t: Tableau) -> Tableau:
    if not t.is_semistandard():
        raise NotSemistandardError(f"tableau {t.label} is not semistandard")
    so_rank(t.n)
    return tableau_of(t.n, _k1_rows(t.n, t.rows))


def is_ai_tableau(t: Tableau, n: int | None = None) -> bool:
    """d1 <= m and t^c_{i,1} <= t_{i,2} for i in [1, d2]; ``n`` overrides the tableau's alphabet."""
    return _is_ai_rows(t.n if n is None else n, t.rows)


@lru_cache(maxsize=200_000)
def _std_rows(n: int, rows: Rows) -> Rows:
    cap = sum(len(row) for row in rows) + n
    current = rows
    for _ in range(cap + 1):
        if _is_ai_rows(n, current):
            return current
        current = _k1_rows(n, current)
    logger.error("std_cap_exceeded", n=n, rows=rows, cap=cap)
    raise StandardizationError(f"no AI-tableau within {cap} K1 steps from {rows}")


def std(t: Tableau) -> Tableau:
    """P^AI-symbol of T."""
    if not t.is_semistandard():
        raise NotSemistandardError(f"tableau {t.label} is not semistandard")
    so_rank(t.n)
    return tableau_of(t.n, _std_rows(t.n, t.rows))


def std_rows(n: int, rows: Rows) -> Rows:
    """Row-level std for callers holding rows that are semistandard by construction."""
    return _std_rows(n, rows)


@lru_cache(maxsize=None)
def enumerate_sst_ai(n: int, rho: Partition) -> tuple[Tableau, ...]:
    """SST_n^AI(rho) in canonical order; empty when l(rho) > m."""
    if rho.length > so_rank(n):
        return ()
    return tuple(t for t in enumerate_ssyt(n, rho) if _is_ai_rows(n, t.rows))


def require_rank_shape(n: int, rho: Partition) -> int:
    """m for n, after checking l(rho) <= m."""
    m = so_rank(n)
    if rho.length > m:
        raise ShapeError(f"shape {rho} has more than m={m} rows for n={n}")
    return m

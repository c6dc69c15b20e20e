"""Column reading, Schensted row insertion, reverse bumping and the RS correspondence.

The row-level helpers (``bump``, ``unbump``, ``p_rows``, ``column_letters``) work
on plain tuples and are shared with the crystal and RS^AI code; the public
functions validate their input and return models.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Iterable

from aicrystal.errors import CornerError, LetterError, NotSemistandardError
from aicrystal.models import Rows, Tableau, Word, tableau_of, word_of


# ---------------------------------------------------------------------------
# Row-level primitives
# ---------------------------------------------------------------------------

def _freeze(rows: list[list[int]]) -> Rows:
    return tuple(tuple(row) for row in rows if row)


def bump(rows: Rows, letter: int) -> tuple[Rows, tuple[int, int]]:
    """Row-insert ``letter``; returns the new rows and the 1-based new cell."""
    work = [list(row) for row in rows]
    x = letter
    for r, row in enumerate(work):
        c = bisect_right(row, x)  # leftmost entry strictly greater than x
        if c == len(row):
            row.append(x)
            return _freeze(work), (r + 1, c + 1)
        row[c], x = x, row[c]
    work.append([x])
    return _freeze(work), (len(work), 1)


def is_removable(rows: Rows, corner: tuple[int, int]) -> bool:
    r, c = corner
    if not 1 <= r <= len(rows) or len(rows[r - 1]) != c:
        return False
    return r == len(rows) or len(rows[r]) < c


def unbump(rows: Rows, corner: tuple[int, int]) -> tuple[Rows, int]:
    """Reverse bumping from a removable corner; inverse of ``bump``."""
    if not is_removable(rows, corner):
        raise CornerError(f"cell {corner} is not a removable corner")
    work = [list(row) for row in rows]
    x = work[corner[0] - 1].pop()
    for rr in range(corner[0] - 2, -1, -1):
        row = work[rr]
        c = bisect_left(row, x) - 1  # rightmost entry strictly less than x
        row[c], x = x, row[c]
    return _freeze(work), x


def p_rows(letters: Iterable[int]) -> Rows:
    rows: Rows = ()
    for x in letters:
        rows, _ = bump(rows, x)
    return rows


def column_letters(rows: Rows) -> tuple[int, ...]:
    """CR as a letter tuple: columns bottom to top, left to right."""
    if not rows:
        return ()
    out: list[int] = []
    for j in range(len(rows[0])):
        height = sum(1 for row in rows if len(row) > j)
        out.extend(rows[i][j] for i in range(height - 1, -1, -1))
    return tuple(out)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def _require_semistandard(t: Tableau) -> None:
    if not t.is_semistandard():
        raise NotSemistandardError(f"tableau {t.label} is not semistandard")


def column_reading(t: Tableau) -> Word:
    return word_of(t.n, column_letters(t.rows))


def row_insert(t: Tableau, letter: int) -> Tableau:
    """(T ← l) by Schensted row insertion."""
    _require_semistandard(t)
    if not 1 <= letter <= t.n:
        raise LetterError(f"letter {letter} outside [1, {t.n}]")
    rows, _ = bump(t.rows, letter)
    return tableau_of(t.n, rows)


def reverse_insert(t: Tableau, corner: tuple[int, int]) -> tuple[Tableau, int]:
    """Undo the insertion whose new cell is ``corner``; returns (T', l)."""
    _require_semistandard(t)
    rows, letter = unbump(t.rows, corner)
    return tableau_of(t.n, rows), letter


def p_symbol(w: Word) -> Tableau:
    return tableau_of(w.n, p_rows(w.letters))


def rs(w: Word) -> tuple[Tableau, Tableau]:
    """Robinson-Schensted: (P(w), Q(w)), Q standard on [1, |w|]."""
    p: Rows = ()
    q: list[list[int]] = []
    for k, x in enumerate(w.letters, 1):
        p, (r, _) = bump(p, x)
        if r > len(q):
            q.append([])
        q[r - 1].append(k)
    return tableau_of(w.n, p), tableau_of(len(w), _freeze(q))


def p_symbol_tensor(t: Tableau, s: Tableau) -> Tableau:
    """P(T ⊗ S) = P(CR(T) * CR(S))."""
    _require_semistandard(t)
    _require_semistandard(s)
    n = max(t.n, s.n)
    return tableau_of(n, p_rows(column_letters(t.rows) + column_letters(s.rows)))

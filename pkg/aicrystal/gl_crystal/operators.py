"""Kashiwara operators, string lengths and weights on words and tableaux.

Words are tensor powers of single boxes under the rule

    F_i(b1 ⊗ b2) = F_i b1 ⊗ b2  if eps_i(b1) >= phi_i(b2),  else b1 ⊗ F_i b2
    E_i(b1 ⊗ b2) = E_i b1 ⊗ b2  if eps_i(b1) >  phi_i(b2),  else b1 ⊗ E_i b2

On a word this is the signature rule: letter i is "+", letter i+1 is "-",
adjacent "-+" pairs cancel, F_i changes the rightmost surviving "+" and E_i
the leftmost surviving "-".  Tableaux act through their column reading and the
P-symbol.  ``GlTensor`` pairs are evaluated by the displayed rule itself.
"""

from __future__ import annotations

from functools import singledispatch
from typing import Any

from aicrystal.errors import CrystalIndexError
from aicrystal.models import GlWeight, Tableau, Word, tableau_of, word_of
from aicrystal.tableaux.insertion import column_letters, p_rows


def check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise CrystalIndexError(f"crystal index {i} outside [1, {n - 1}]")


def signature(letters: tuple[int, ...], i: int) -> tuple[list[int], list[int]]:
    """Positions of the uncancelled "-" (letter i+1) and "+" (letter i) entries."""
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(letters):
        if x == i + 1:
            minus.append(pos)
        elif x == i:
            if minus:
                minus.pop()
            else:
                plus.append(pos)
    return minus, plus


def _raise_letters(letters: tuple[int, ...], i: int) -> tuple[int, ...] | None:
    minus, _ = signature(letters, i)
    if not minus:
        return None
    pos = minus[0]
    return letters[:pos] + (i,) + letters[pos + 1:]


def _lower_letters(letters: tuple[int, ...], i: int) -> tuple[int, ...] | None:
    _, plus = signature(letters, i)
    if not plus:
        return None
    pos = plus[-1]
    return letters[:pos] + (i + 1,) + letters[pos + 1:]


# ---------------------------------------------------------------------------
# Dispatching operators
# ---------------------------------------------------------------------------

@singledispatch
def etil(b: Any, i: int) -> Any:
    raise TypeError(f"no gl-crystal structure on {type(b).__name__}")


@singledispatch
def ftil(b: Any, i: int) -> Any:
    raise TypeError(f"no gl-crystal structure on {type(b).__name__}")


@singledispatch
def eps(b: Any, i: int) -> int:
    raise TypeError(f"no gl-crystal structure on {type(b).__name__}")


@singledispatch
def phi(b: Any, i: int) -> int:
    raise TypeError(f"no gl-crystal structure on {type(b).__name__}")


@singledispatch
def wt(b: Any) -> GlWeight:
    raise TypeError(f"no gl-crystal structure on {type(b).__name__}")


def _content(n: int, letters: tuple[int, ...]) -> GlWeight:
    counts = [0] * n
    for x in letters:
        counts[x - 1] += 1
    return GlWeight(coordinates=tuple(counts))


# -- words --------------------------------------------------------------------

@etil.register
def _(b: Word, i: int) -> Word | None:
    check_index(b.n, i)
    letters = _raise_letters(b.letters, i)
    return None if letters is None else word_of(b.n, letters)


@ftil.register
def _(b: Word, i: int) -> Word | None:
    check_index(b.n, i)
    letters = _lower_letters(b.letters, i)
    return None if letters is None else word_of(b.n, letters)


@eps.register
def _(b: Word, i: int) -> int:
    check_index(b.n, i)
    return len(signature(b.letters, i)[0])


@phi.register
def _(b: Word, i: int) -> int:
    check_index(b.n, i)
    return len(signature(b.letters, i)[1])


@wt.register
def _(b: Word) -> GlWeight:
    return _content(b.n, b.letters)


# -- tableaux -----------------------------------------------------------------

@etil.register
def _(b: Tableau, i: int) -> Tableau | None:
    check_index(b.n, i)
    letters = _raise_letters(column_letters(b.rows), i)
    return None if letters is None else tableau_of(b.n, p_rows(letters))


@ftil.register
def _(b: Tableau, i: int) -> Tableau | None:
    check_index(b.n, i)
    letters = _lower_letters(column_letters(b.rows), i)
    return None if letters is None else tableau_of(b.n, p_rows(letters))


@eps.register
def _(b: Tableau, i: int) -> int:
    check_index(b.n, i)
    return len(signature(column_letters(b.rows), i)[0])


@phi.register
def _(b: Tableau, i: int) -> int:
    check_index(b.n, i)
    return len(signature(column_letters(b.rows), i)[1])


@wt.register
def _(b: Tableau) -> GlWeight:
    return _content(b.n, b.row_word)

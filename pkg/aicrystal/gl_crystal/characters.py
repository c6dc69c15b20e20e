"""gl_n characters: ch(B) = sum of x^wt(b)."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from aicrystal.gl_crystal.operators import wt
from aicrystal.laurent import LaurentPolynomial


def gl_variables(n: int) -> tuple[str, ...]:
    return tuple(f"x{k}" for k in range(1, n + 1))


def ch_gl(elements: Iterable[Any], n: int | None = None) -> LaurentPolynomial:
    """Character of a finite set of words or tableaux; ``n`` is required for an empty set."""
    items = list(elements)
    if n is None:
        n = items[0].n if items else 0
    acc: dict[tuple[int, ...], Fraction] = {}
    for b in items:
        exps = wt(b).coordinates
        acc[exps] = acc.get(exps, Fraction(0)) + 1
    return LaurentPolynomial(gl_variables(n), acc)

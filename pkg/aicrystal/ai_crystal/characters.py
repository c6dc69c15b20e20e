"""AI characters.

ch_AI(B) = (1/2^m) sum over b and over signs of
          y1^{±deg_1 b} y3^{±deg_3 b} ... y_{2m-1}^{±deg_{2m-1} b}

in the variables y1, y3, ..., y_{2m-1}.  The integer coefficients are the
weight-space dimensions of the modelled so_n-module.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from itertools import product
from typing import Any

from aicrystal.ai_crystal.structure import deg
from aicrystal.laurent import LaurentPolynomial


def ai_variables(m: int) -> tuple[str, ...]:
    return tuple(f"y{2 * k - 1}" for k in range(1, m + 1))


def odd_degrees(b: Any, m: int) -> tuple[int, ...]:
    """(deg_1 b, deg_3 b, ..., deg_{2m-1} b)."""
    return tuple(deg(b, 2 * k - 1) for k in range(1, m + 1))


def ch_ai(
    elements: Iterable[Any], m: int, *, assert_integral: bool = False
) -> LaurentPolynomial:
    """Sign-sum definition of ch_AI, exact over the rationals."""
    scale = Fraction(1, 2**m)
    acc: dict[tuple[int, ...], Fraction] = {}
    for b in elements:
        degrees = odd_degrees(b, m)
        for signs in product((1, -1), repeat=m):
            exps = tuple(s * d for s, d in zip(signs, degrees))
            acc[exps] = acc.get(exps, Fraction(0)) + scale
    poly = LaurentPolynomial(ai_variables(m), acc)
    if assert_integral:
        poly.integer_terms()
    return poly


def ai_contribution(b: Any, m: int) -> LaurentPolynomial:
    """Product form of one element's share: prod_i (y^{d_i} + y^{-d_i}) / 2."""
    variables = ai_variables(m)
    poly = LaurentPolynomial.monomial(variables, (0,) * m)
    for k, d in enumerate(odd_degrees(b, m)):
        up = tuple(d if j == k else 0 for j in range(m))
        down = tuple(-x for x in up)
        factor = LaurentPolynomial.monomial(variables, up) + LaurentPolynomial.monomial(
            variables, down
        )
        poly = poly * factor * Fraction(1, 2)
    return poly


def weight_multiplicities(elements: Iterable[Any], m: int) -> dict[tuple[int, ...], int]:
    """Weight -> dimension of the weight space, read off the integral character."""
    return ch_ai(elements, m).integer_terms()

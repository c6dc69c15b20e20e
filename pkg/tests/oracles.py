"""Independent reference computations used by the tests.

These never call into the crystal code: characters come from alternant
quotients evaluated with sympy, RS^AI preimages from a whole-word lookup.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Any

import sympy

Exponents = tuple[int, ...]


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _weyl_group(n: int, m: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """(permutation, signs, det) for the Weyl group of B_m (n odd) or D_m (n even)."""
    elements = []
    for perm in permutations(range(m)):
        for signs in product((1, -1), repeat=m):
            negations = signs.count(-1)
            if n % 2 == 0 and negations % 2:
                continue
            det = _perm_sign(perm) * (-1) ** negations
            elements.append((perm, signs, det))
    return elements


def _laurent_terms(expr: Any, symbols: list[sympy.Symbol]) -> dict[Exponents, int]:
    terms: dict[Exponents, int] = {}
    for monomial, coeff in sympy.expand(expr).as_coefficients_dict().items():
        powers = monomial.as_powers_dict()
        exps = tuple(int(powers.get(s, 0)) for s in symbols)
        terms[exps] = terms.get(exps, 0) + int(coeff)
    return {e: c for e, c in terms.items() if c}


def weyl_character(n: int, nu: tuple[int, ...]) -> dict[Exponents, int]:
    """Character of the so_n-irreducible with highest weight nu (epsilon basis).

    Exponents are doubled internally so the half-integral B_m Weyl vector stays
    integral; the result is returned in the epsilon coordinates.
    """
    m = n // 2
    if n % 2:
        rho2 = [2 * (m - i) - 1 for i in range(m)]
    else:
        rho2 = [2 * (m - 1 - i) for i in range(m)]
    shifted2 = [2 * c + r for c, r in zip(nu, rho2)]
    t = list(sympy.symbols(f"t1:{m + 1}"))

    def alternant(vector: list[int]) -> Any:
        total = 0
        for perm, signs, det in _weyl_group(n, m):
            mono = 1
            for k in range(m):
                mono *= t[k] ** (signs[k] * vector[perm[k]])
            total += det * mono
        return total

    quotient = sympy.cancel(sympy.together(alternant(shifted2) / alternant(rho2)))
    doubled = _laurent_terms(quotient, t)
    return {tuple(e // 2 for e in exps): c for exps, c in doubled.items()}


def schur_polynomial(n: int, parts: tuple[int, ...]) -> dict[Exponents, int]:
    """s_lambda(x1, ..., xn) as the bialternant det(x_i^{lambda_j + n - j}) / det(x_i^{n - j})."""
    x = list(sympy.symbols(f"x1:{n + 1}"))
    lam = list(parts) + [0] * (n - len(parts))
    num = sympy.Matrix(n, n, lambda i, j: x[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: x[i] ** (n - 1 - j)).det()
    quotient = sympy.cancel(num / den)
    return _laurent_terms(quotient, x)


def brute_force_rs_ai_inverse(n: int, d: int) -> dict[tuple, tuple[int, ...]]:
    """(P^AI, oscillating walk key) -> letters, over every word of length d."""
    from aicrystal.models import word_of
    from aicrystal.rs_ai import rs_ai

    table: dict[tuple, tuple[int, ...]] = {}
    for letters in product(range(1, n + 1), repeat=d):
        p, ot = rs_ai(word_of(n, letters))
        table[(p, ot.sort_key)] = letters
    return table

"""Singular elements of degree rho, the canonical tableau T_rho and so_n highest weights."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from aicrystal.ai_crystal.structure import btil, deg
from aicrystal.kmatrix.standardization import k1, require_rank_shape
from aicrystal.models import Partition, SoWeight, Tableau, tableau_of


def _paired_walk(b: Any, i: int, times: int) -> Any | None:
    """Apply B̃_{2i-1} then B̃_{2i}, ``times`` times; None once either annihilates."""
    for _ in range(times):
        for j in (2 * i - 1, 2 * i):
            b = btil(b, j)
            if b is None:
                return None
    return b


def is_singular(b: Any, rho: Partition) -> bool:
    """Whether b is a singular element of degree rho.

    (1) deg_{2i-1} b = rho_i for i in [1, m]
    (2) deg_{2i} b = 0 whenever 2i < n
    (3) deg_{2i+1} of the paired walk of length rho_{i+1} from b is 0 whenever 2i+1 < n
    """
    n = b.n
    m = require_rank_shape(n, rho)
    if any(deg(b, 2 * i - 1) != rho.part(i) for i in range(1, m + 1)):
        return False
    if any(deg(b, 2 * i) != 0 for i in range(1, m + 1) if 2 * i < n):
        return False
    for i in range(1, m + 1):
        if 2 * i + 1 >= n:
            continue
        walked = _paired_walk(b, i, rho.part(i + 1))
        if walked is None or deg(walked, 2 * i + 1) != 0:
            return False
    return True


def singular_elements(elements: Iterable[Any], rho: Partition) -> list[Any]:
    return [b for b in elements if is_singular(b, rho)]


def t_rho(n: int, rho: Partition) -> Tableau:
    """T_rho: row i is a_{2i-1} followed by rho_i - 1 copies of 2i.

    a_{2i-1} in {2i-1, 2i} makes rho_i - [a_{2i-1} = 2i-1] - [a_{2i+1} = 2i+1]
    even, with a_{2l+1} = 2l+2 below the last row.
    """
    require_rank_shape(n, rho)
    rows: list[tuple[int, ...]] = []
    below_odd = 0
    for i in range(rho.length, 0, -1):
        part = rho.part(i)
        first = 2 * i - 1 if (part - 1 - below_odd) % 2 == 0 else 2 * i
        below_odd = int(first == 2 * i - 1)
        rows.append((first,) + (2 * i,) * (part - 1))
    return tableau_of(n, tuple(reversed(rows)))


def so_highest_weights(n: int, rho: Partition) -> list[SoWeight]:
    """[nu_rho], or [nu_rho^+, nu_rho^-] when l(rho) = n/2."""
    m = require_rank_shape(n, rho)
    nu = tuple(rho.part(i) for i in range(1, m + 1))
    if n % 2 == 1 or rho.length < m:
        return [SoWeight.model_construct(n=n, coordinates=nu)]
    minus = nu[:-1] + (-nu[-1],)
    return [
        SoWeight.model_construct(n=n, coordinates=nu),
        SoWeight.model_construct(n=n, coordinates=minus),
    ]


def expected_singular_set(n: int, rho: Partition, sigma: Partition) -> tuple[Tableau, ...]:
    """SST_n^AI(rho) ∩ Sing(sigma): empty, {T_rho}, or {T_rho, K1(T_rho)} when l(rho) = n/2."""
    if sigma != rho:
        return ()
    t = t_rho(n, rho)
    if 2 * rho.length == n:
        return (t, k1(t))
    return (t,)


def so_dimension(nu: SoWeight) -> int:
    """Weyl dimension formula for so_n in the epsilon basis.

    With l = nu + rho_W:
        n = 2m+1:  prod_{i<j} (l_i^2 - l_j^2) / (r_i^2 - r_j^2) * prod_i l_i / r_i
        n = 2m:    prod_{i<j} (l_i^2 - l_j^2) / (r_i^2 - r_j^2)
    """
    m = len(nu.coordinates)
    if nu.n % 2 == 1:
        half = [Fraction(2 * (m - i) - 1, 2) for i in range(m)]
    else:
        half = [Fraction(m - 1 - i) for i in range(m)]
    shifted = [c + r for c, r in zip(nu.coordinates, half)]
    dim = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            dim *= (shifted[i] ** 2 - shifted[j] ** 2) / (half[i] ** 2 - half[j] ** 2)
    if nu.n % 2 == 1:
        for i in range(m):
            dim *= shifted[i] / half[i]
    return int(dim)

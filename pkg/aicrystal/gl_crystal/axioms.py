"""Local axiom checks for gl-crystals.

Each check returns a list of readable violations; an empty list means the
axioms hold on the given elements.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Any

from aicrystal.gl_crystal.operators import eps, etil, ftil, phi, wt


def _string_length(b: Any, op: Any, i: int) -> int:
    k = 0
    while (b := op(b, i)) is not None:
        k += 1
    return k


def stembridge_violations(elements: Iterable[Any], n: int) -> list[str]:
    problems: list[str] = []
    for b in elements:
        weight = wt(b).coordinates
        for i in range(1, n):
            e, f = etil(b, i), ftil(b, i)
            if f is not None and etil(f, i) != b:
                problems.append(f"E_{i} F_{i} {b} != {b}")
            if e is not None and ftil(e, i) != b:
                problems.append(f"F_{i} E_{i} {b} != {b}")
            if eps(b, i) != _string_length(b, etil, i):
                problems.append(f"eps_{i}({b}) is not the E-string length")
            if phi(b, i) != _string_length(b, ftil, i):
                problems.append(f"phi_{i}({b}) is not the F-string length")
            if phi(b, i) - eps(b, i) != weight[i - 1] - weight[i]:
                problems.append(f"phi_{i} - eps_{i} disagrees with wt at {b}")
            if e is None:
                continue
            for j in range(1, n):
                if abs(i - j) > 1:
                    if eps(e, j) != eps(b, j) or phi(e, j) != phi(b, j):
                        problems.append(f"E_{i} changes eps_{j}/phi_{j} at {b}")
                    ej = etil(b, j)
                    left = etil(e, j)
                    right = None if ej is None else etil(ej, i)
                    if left != right:
                        problems.append(f"E_{i} and E_{j} do not commute at {b}")
                elif abs(i - j) == 1:
                    shift = (eps(e, j) - eps(b, j), phi(e, j) - phi(b, j))
                    if shift not in ((0, -1), (1, 0)):
                        problems.append(f"E_{i} shifts (eps_{j}, phi_{j}) by {shift} at {b}")
    return problems

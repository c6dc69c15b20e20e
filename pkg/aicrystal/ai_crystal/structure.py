"""AI-crystal structure: B̃_i and deg_i.

Any gl-crystal element (word, tableau, gl tensor pair) carries the induced
structure

    deg_i(b) = eps_i(b)      if phi_i(b) is even, else eps_i(b) + 1
    B̃_i b   = Ẽ_i b         if phi_i(b) is even, else F̃_i b

and an ``AITensor`` (AI element ⊗ gl element) follows the three-case rule
keyed on deg_i(b1) against phi_i(b2).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import partial, singledispatch
from typing import Any

from aicrystal.gl_crystal.components import connected_component, sort_key
from aicrystal.gl_crystal.operators import check_index, eps, etil, ftil, phi


@singledispatch
def deg(b: Any, i: int) -> int:
    e = eps(b, i)
    return e if phi(b, i) % 2 == 0 else e + 1


@singledispatch
def btil(b: Any, i: int) -> Any:
    return etil(b, i) if phi(b, i) % 2 == 0 else ftil(b, i)


@dataclass(frozen=True)
class AITensor:
    """b1 ⊗ b2 with b1 in an AI-crystal and b2 in a gl-crystal."""

    left: Any
    right: Any

    @property
    def n(self) -> int:
        return max(self.left.n, self.right.n)

    def __str__(self) -> str:
        return f"{self.left}⊗{self.right}"


def ai_tensor_deg(b1: Any, b2: Any, i: int) -> int:
    d, p = deg(b1, i), phi(b2, i)
    if d > p:
        return d - p + eps(b2, i)
    return eps(b2, i) if (p - d) % 2 == 0 else eps(b2, i) + 1


def ai_tensor_btil(b1: Any, b2: Any, i: int) -> AITensor | None:
    d, p = deg(b1, i), phi(b2, i)
    if d > p:
        left = btil(b1, i)
        return None if left is None else AITensor(left, b2)
    right = etil(b2, i) if (p - d) % 2 == 0 else ftil(b2, i)
    return None if right is None else AITensor(b1, right)


@deg.register
def _(b: AITensor, i: int) -> int:
    check_index(b.n, i)
    return ai_tensor_deg(b.left, b.right, i)


@btil.register
def _(b: AITensor, i: int) -> AITensor | None:
    check_index(b.n, i)
    return ai_tensor_btil(b.left, b.right, i)


@sort_key.register
def _(b: AITensor) -> tuple:
    return (sort_key(b.left), sort_key(b.right))


# ---------------------------------------------------------------------------
# Components and checks
# ---------------------------------------------------------------------------

def ai_generators(n: int) -> list[Callable[[Any], Any]]:
    return [partial(btil, i=i) for i in range(1, n)]


def ai_component(seed: Any, n: int | None = None) -> tuple[Any, ...]:
    """C^AI(seed): the orbit under all B̃_i."""
    return connected_component(seed, ai_generators(seed.n if n is None else n))


def ai_axiom_violations(elements: Iterable[Any], n: int) -> list[str]:
    """The three AI-crystal axioms.

    Also checks "B̃_i b absent iff deg_i b = 0" and distance-2 commutation.
    """
    problems: list[str] = []
    for b in elements:
        for i in range(1, n):
            c = btil(b, i)
            if (c is None) != (deg(b, i) == 0):
                problems.append(f"B_{i} {b} absent/deg mismatch")
            if c is None:
                continue
            if deg(c, i) != deg(b, i) or btil(c, i) != b:
                problems.append(f"B_{i} not an involution preserving deg_{i} at {b}")
            for j in range(1, n):
                if abs(i - j) == 1 and abs(deg(c, j) - deg(b, j)) != 1:
                    problems.append(f"B_{i} moves deg_{j} by {deg(c, j) - deg(b, j)} at {b}")
                if abs(i - j) > 1:
                    if deg(c, j) != deg(b, j):
                        problems.append(f"B_{i} changes deg_{j} at {b}")
                    bj = btil(b, j)
                    if btil(c, j) != (None if bj is None else btil(bj, i)):
                        problems.append(f"B_{i} and B_{j} do not commute at {b}")
    return problems


def morphism_violations(psi: Callable[[Any], Any], elements: Iterable[Any], n: int) -> list[str]:
    """psi commutes with every B̃_i and preserves deg_i; psi may send elements to None."""
    problems: list[str] = []
    for b in elements:
        image = psi(b)
        for i in range(1, n):
            c = btil(b, i)
            lhs = None if c is None else psi(c)
            rhs = None if image is None else btil(image, i)
            if lhs != rhs:
                problems.append(f"psi(B_{i} {b}) != B_{i} psi({b})")
            if image is not None and deg(image, i) != deg(b, i):
                problems.append(f"deg_{i} changes under psi at {b}")
    return problems

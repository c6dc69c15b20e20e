"""Explicit tensor pairs b1 ⊗ b2 of gl-crystal elements.

String lengths of a pair follow from the tensor rule:

    eps_i(b1 ⊗ b2) = eps_i(b2) + max(0, eps_i(b1) - phi_i(b2))
    phi_i(b1 ⊗ b2) = phi_i(b1) + max(0, phi_i(b2) - eps_i(b1))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from aicrystal.gl_crystal.operators import check_index, eps, etil, ftil, phi, wt
from aicrystal.models import GlWeight, Word, word_of


@dataclass(frozen=True)
class GlTensor:
    left: Any
    right: Any

    @property
    def n(self) -> int:
        return max(self.left.n, self.right.n)


def tensor_of_letters(w: Word) -> Any:
    """w1 ⊗ (w2 ⊗ (... ⊗ wd)) built from single-letter words; the empty word stays a word."""
    if len(w) <= 1:
        return w
    out: Any = word_of(w.n, (w.letters[-1],))
    for x in reversed(w.letters[:-1]):
        out = GlTensor(word_of(w.n, (x,)), out)
    return out


def flatten(b: Any) -> Word:
    """Concatenate the letters of a (nested) tensor of words."""
    if isinstance(b, GlTensor):
        return flatten(b.left) + flatten(b.right)
    return b


@eps.register
def _(b: GlTensor, i: int) -> int:
    check_index(b.n, i)
    return eps(b.right, i) + max(0, eps(b.left, i) - phi(b.right, i))


@phi.register
def _(b: GlTensor, i: int) -> int:
    check_index(b.n, i)
    return phi(b.left, i) + max(0, phi(b.right, i) - eps(b.left, i))


@ftil.register
def _(b: GlTensor, i: int) -> GlTensor | None:
    check_index(b.n, i)
    if eps(b.left, i) >= phi(b.right, i):
        left = ftil(b.left, i)
        return None if left is None else GlTensor(left, b.right)
    right = ftil(b.right, i)
    return None if right is None else GlTensor(b.left, right)


@etil.register
def _(b: GlTensor, i: int) -> GlTensor | None:
    check_index(b.n, i)
    if eps(b.left, i) > phi(b.right, i):
        left = etil(b.left, i)
        return None if left is None else GlTensor(left, b.right)
    right = etil(b.right, i)
    return None if right is None else GlTensor(b.left, right)


@wt.register
def _(b: GlTensor) -> GlWeight:
    left, right = wt(b.left).coordinates, wt(b.right).coordinates
    size = max(len(left), len(right))
    left += (0,) * (size - len(left))
    right += (0,) * (size - len(right))
    return GlWeight(coordinates=tuple(a + c for a, c in zip(left, right)))

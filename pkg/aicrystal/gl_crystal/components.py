"""Connected components of crystal graphs by breadth-first search.

The traversal is generic over the generator maps, so gl-crystals (Ẽ_i, F̃_i)
and AI-crystals (B̃_i) share it.  Results are returned in canonical order.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable, Sequence
from functools import partial, singledispatch
from typing import Any

from aicrystal.gl_crystal.operators import etil, ftil
from aicrystal.gl_crystal.tensor import GlTensor
from aicrystal.models import Tableau, Word

Generator = Callable[[Any], Any]


@singledispatch
def sort_key(b: Any) -> tuple:
    raise TypeError(f"no canonical order for {type(b).__name__}")


@sort_key.register
def _(b: Tableau) -> tuple:
    return (b.shape.parts, b.row_word)


@sort_key.register
def _(b: Word) -> tuple:
    return (len(b.letters), b.letters)


@sort_key.register
def _(b: GlTensor) -> tuple:
    return (sort_key(b.left), sort_key(b.right))


def gl_generators(n: int) -> list[Generator]:
    gens: list[Generator] = []
    for i in range(1, n):
        gens.append(partial(etil, i=i))
        gens.append(partial(ftil, i=i))
    return gens


def connected_component(
    seed: Any,
    generators: Sequence[Generator],
    *,
    key: Callable[[Any], Any] = sort_key,
) -> tuple[Any, ...]:
    """Orbit of ``seed`` under ``generators`` (absent results ignored), sorted by ``key``."""
    seen = {seed}
    queue = deque([seed])
    while queue:
        b = queue.popleft()
        for gen in generators:
            c = gen(b)
            if c is not None and c not in seen:
                seen.add(c)
                queue.append(c)
    return tuple(sorted(seen, key=key))


def components(
    elements: Iterable[Any],
    generators: Sequence[Generator],
    *,
    key: Callable[[Any], Any] = sort_key,
) -> list[tuple[Any, ...]]:
    """Split a generator-closed set into components, ordered by their first element."""
    ordered = sorted(elements, key=key)
    remaining = set(ordered)
    found: list[tuple[Any, ...]] = []
    for b in ordered:
        if b in remaining:
            comp = connected_component(b, generators, key=key)
            remaining.difference_update(comp)
            found.append(comp)
    return found

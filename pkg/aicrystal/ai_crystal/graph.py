"""AI-crystal graphs: undirected edges b -- B̃_i b labelled i."""

from __future__ import annotations

from collections.abc import Iterable
from functools import partial
from typing import Any

from aicrystal.ai_crystal.structure import btil
from aicrystal.gl_crystal.graph import CrystalGraph, build_graph


def ai_graph(elements: Iterable[Any], n: int) -> CrystalGraph:
    maps = [(i, partial(btil, i=i)) for i in range(1, n)]
    return build_graph(elements, maps, directed=False)

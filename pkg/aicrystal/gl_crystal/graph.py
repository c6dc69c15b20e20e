"""Crystal graph export as DOT text or JSON-ready dicts."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import partial
from typing import Any

from aicrystal.gl_crystal.components import sort_key
from aicrystal.gl_crystal.operators import ftil


@dataclass
class CrystalGraph:
    """Nodes in canonical order; edges as (source, target, index) label triples."""

    nodes: list[str] = field(default_factory=list)
    edges: list[tuple[str, str, int]] = field(default_factory=list)
    directed: bool = True

    def to_dot(self) -> str:
        head, arrow = ("digraph", "->") if self.directed else ("graph", "--")
        lines = [f"{head} crystal {{"]
        for label in self.nodes:
            lines.append(f'    "{label}";')
        for source, target, i in self.edges:
            lines.append(f'    "{source}" {arrow} "{target}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_payload(self) -> dict[str, Any]:
        return {
            "directed": self.directed,
            "nodes": list(self.nodes),
            "edges": [
                {"source": s, "target": t, "label": i} for s, t, i in self.edges
            ],
        }


def build_graph(
    elements: Iterable[Any],
    maps: Sequence[tuple[int, Callable[[Any], Any]]],
    *,
    directed: bool,
) -> CrystalGraph:
    """Edges b -> f(b) for every labelled map; undirected edges are kept once."""
    ordered = sorted(elements, key=sort_key)
    position = {b: k for k, b in enumerate(ordered)}
    edges: list[tuple[int, int, int]] = []
    for b in ordered:
        for i, f in maps:
            c = f(b)
            if c is None or c not in position:
                continue
            if not directed and position[c] < position[b]:
                continue
            edges.append((position[b], position[c], i))
    edges.sort(key=lambda e: (e[0], e[2], e[1]))
    return CrystalGraph(
        nodes=[str(b) for b in ordered],
        edges=[(str(ordered[s]), str(ordered[t]), i) for s, t, i in edges],
        directed=directed,
    )


def gl_graph(elements: Iterable[Any], n: int) -> CrystalGraph:
    """Directed graph with an edge b -> F̃_i b labelled i."""
    maps = [(i, partial(ftil, i=i)) for i in range(1, n)]
    return build_graph(elements, maps, directed=True)

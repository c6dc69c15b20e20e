"""Type-A (gl_n) crystal structure on words and tableaux."""

from aicrystal.gl_crystal.axioms import stembridge_violations
from aicrystal.gl_crystal.characters import ch_gl, gl_variables
from aicrystal.gl_crystal.components import (
    components,
    connected_component,
    gl_generators,
    sort_key,
)
from aicrystal.gl_crystal.graph import CrystalGraph, build_graph, gl_graph
from aicrystal.gl_crystal.operators import eps, etil, ftil, phi, signature, wt
from aicrystal.gl_crystal.tensor import GlTensor, flatten, tensor_of_letters

__all__ = [
    "CrystalGraph",
    "GlTensor",
    "build_graph",
    "ch_gl",
    "components",
    "connected_component",
    "eps",
    "etil",
    "flatten",
    "ftil",
    "gl_generators",
    "gl_graph",
    "gl_variables",
    "phi",
    "signature",
    "sort_key",
    "stembridge_violations",
    "tensor_of_letters",
    "wt",
]

"""Branching from gl_n to so_n by grouping SST_n(lambda) on Q^AI(CR(T))."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any

from aicrystal.ai_crystal.singular import so_highest_weights
from aicrystal.errors import ShapeError
from aicrystal.kmatrix.standardization import enumerate_sst_ai
from aicrystal.log import get_logger
from aicrystal.models import OscillatingTableau, Partition, Tableau, tableau_of
from aicrystal.rs_ai.correspondence import p_ai, q_ai
from aicrystal.tableaux.enumeration import enumerate_ssyt
from aicrystal.tableaux.insertion import column_reading

logger = get_logger(__name__)


def t_lambda(lm: Partition) -> Tableau:
    """Column superstandard tableau: T(i, j) = d_1 + ... + d_{j-1} + i."""
    heights = lm.column_lengths
    offsets = [sum(heights[:j]) for j in range(len(heights))]
    rows = tuple(
        tuple(offsets[j] + i for j in range(part)) for i, part in enumerate(lm.parts, 1)
    )
    return tableau_of(lm.size, rows)


@dataclass
class BranchingFiber:
    """All T in SST_n(lambda) sharing one oscillating tableau Q'."""

    ot: OscillatingTableau
    members: list[Tableau] = field(default_factory=list)
    p_values: list[Tableau] = field(default_factory=list)

    @property
    def shape(self) -> Partition:
        return self.ot.shape

    def exhausts(self) -> bool:
        """P^AI is a bijection from the fiber onto SST_n^AI(shape)."""
        target = enumerate_sst_ai(self.ot.n, self.shape)
        return len(set(self.p_values)) == len(self.members) == len(target) and set(
            self.p_values
        ) == set(target)


@dataclass
class BranchingResult:
    n: int
    lm: Partition
    fibers: list[BranchingFiber] = field(default_factory=list)

    @property
    def multiplicities(self) -> dict[Partition, int]:
        """[lambda : rho] keyed by rho, in lexicographic shape order."""
        counts: dict[Partition, int] = defaultdict(int)
        for fiber in self.fibers:
            counts[fiber.shape] += 1
        return {rho: counts[rho] for rho in sorted(counts)}

    @property
    def all_fibers_exhaust(self) -> bool:
        return all(fiber.exhausts() for fiber in self.fibers)

    def to_payload(self) -> dict[str, Any]:
        entries = []
        for rho, count in self.multiplicities.items():
            entries.append(
                {
                    "shape": list(rho.parts),
                    "multiplicity": count,
                    "highest_weights": [
                        list(nu.coordinates) for nu in so_highest_weights(self.n, rho)
                    ],
                }
            )
        return {"n": self.n, "lambda": list(self.lm.parts), "multiplicities": entries}


def branch(n: int, lm: Partition) -> BranchingResult:
    if lm.length > n:
        raise ShapeError(f"shape {lm} has more than n={n} rows")
    grouped: dict[tuple, BranchingFiber] = {}
    for t in enumerate_ssyt(n, lm):
        w = column_reading(t)
        _, ot = q_ai(w)
        fiber = grouped.setdefault(ot.sort_key, BranchingFiber(ot=ot))
        fiber.members.append(t)
        fiber.p_values.append(p_ai(w))
    result = BranchingResult(
        n=n, lm=lm, fibers=[grouped[key] for key in sorted(grouped)]
    )
    logger.debug("branching_done", n=n, shape=lm, fibers=len(result.fibers))
    return result

"""Partition helpers: the cover relation and enumeration of Par_l."""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from aicrystal.models import Partition, partition_of


def covers(lm: Partition, mu: Partition) -> bool:
    """lm ◁ mu: D(lm) ⊂ D(mu) and |mu| - |lm| = 1."""
    return lm.covered_by(mu)


def _parts(size: int, max_part: int, max_length: int | None) -> Iterator[tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest_length = None if max_length is None else max_length - 1
    for first in range(min(size, max_part), 0, -1):
        for tail in _parts(size - first, first, rest_length):
            yield (first,) + tail


@lru_cache(maxsize=None)
def partitions_of(size: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``size`` with at most ``max_length`` rows, in lexicographic order."""
    found = [partition_of(p) for p in _parts(size, size, max_length)]
    return tuple(sorted(found))


def partitions_up_to(max_size: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """All partitions of size 0..max_size, grouped by size."""
    return tuple(p for size in range(max_size + 1) for p in partitions_of(size, max_length))


def neighbours(rho: Partition, max_length: int) -> tuple[Partition, ...]:
    """Shapes sigma with rho ◁ sigma or sigma ◁ rho and at most ``max_length`` rows."""
    grown = [rho.add_cell(r) for r in rho.addable_rows() if r <= max_length]
    shrunk = [rho.remove_cell(r) for r in rho.removable_rows()]
    return tuple(sorted(grown + shrunk))

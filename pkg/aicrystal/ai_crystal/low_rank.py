"""Closed-form B̃ tables for SST_3^AI(l), SST_4^AI(l) and SST_4^AI(l1, l2).

Elements are addressed by their parameters:

    n = 3:            T_{a,b}   = a 2^{l-1-b} 3^b          T_l = 3^l
    n = 4, one row:   T_{a,b,c} = a 2^.. 3^b 4^c           T_c = 3^{l-c} 4^c
    n = 4, two rows:  the same first rows over a second row 4^{l2},
                      together with their K1 images

Each table maps (element, i) to the closed-form B̃_i image so that the generic
induced structure can be checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from aicrystal.ai_crystal.structure import btil
from aicrystal.kmatrix.standardization import k1
from aicrystal.models import Partition, Tableau, tableau_of

Action = dict[tuple[Tableau, int], Tableau | None]


@dataclass
class LowRankTable:
    n: int
    shape: Partition
    elements: list[Tableau] = field(default_factory=list)
    actions: Action = field(default_factory=dict)

    def mismatches(self) -> list[str]:
        """Entries where the generic B̃_i disagrees with the closed form."""
        problems: list[str] = []
        for (t, i), expected in self.actions.items():
            got = btil(t, i)
            if got != expected:
                problems.append(
                    f"B_{i} {t}: closed form {expected if expected is not None else 0}, "
                    f"generic {got if got is not None else 0}"
                )
        return problems


def _row(a: int | None, twos: int, threes: int, fours: int = 0) -> tuple[int, ...]:
    head = () if a is None else (a,)
    return head + (2,) * twos + (3,) * threes + (4,) * fours


# ---------------------------------------------------------------------------
# n = 3
# ---------------------------------------------------------------------------

def rank3_element(l: int, a: int, b: int) -> Tableau:
    """T_{a,b}: b is the number of 3's."""
    return tableau_of(3, (_row(a, l - 1 - b, b),))


def rank3_top(l: int) -> Tableau:
    """T_l = 3^l."""
    return tableau_of(3, ((3,) * l,) if l else ())


def rank3_row_table(l: int) -> LowRankTable:
    table = LowRankTable(n=3, shape=Partition.of(l) if l else Partition())
    top = rank3_top(l)
    for a in (1, 2):
        for b in range(l):
            t = rank3_element(l, a, b)
            table.elements.append(t)
            table.actions[(t, 1)] = rank3_element(l, 3 - a, b)
            if (l - (a == 1) - b) % 2 == 0:
                table.actions[(t, 2)] = rank3_element(l, a, b - 1) if b > 0 else None
            else:
                table.actions[(t, 2)] = rank3_element(l, a, b + 1) if b < l - 1 else top
    table.elements.append(top)
    table.actions[(top, 1)] = None
    table.actions[(top, 2)] = rank3_element(l, 2, l - 1) if l else None
    return table


# ---------------------------------------------------------------------------
# n = 4
# ---------------------------------------------------------------------------

def rank4_element(l1: int, a: int, b: int, c: int, l2: int = 0) -> Tableau:
    """T_{a,b,c}: b threes and c fours in the first row, over 4^{l2}."""
    rows = (_row(a, l1 - 1 - b - c, b, c),)
    if l2:
        rows += ((4,) * l2,)
    return tableau_of(4, rows)


def rank4_top(l1: int, c: int, l2: int = 0) -> Tableau:
    """T_c = 3^{l1-c} 4^c over 4^{l2}."""
    first = (3,) * (l1 - c) + (4,) * c
    rows = (first,) if first else ()
    if l2:
        rows += ((4,) * l2,)
    return tableau_of(4, rows)


def _rank4_b2(table: LowRankTable, l1: int, l2: int, a: int, b: int, c: int) -> None:
    t = rank4_element(l1, a, b, c, l2)
    if (l1 - (a == 1) - b - c) % 2 == 0:
        image = rank4_element(l1, a, b - 1, c, l2) if b > 0 else None
    elif b < l1 - c - 1:
        image = rank4_element(l1, a, b + 1, c, l2)
    else:
        image = rank4_top(l1, c, l2)
    table.actions[(t, 2)] = image


def _rank4_top_actions(table: LowRankTable, l1: int, l2: int, c: int) -> None:
    top = rank4_top(l1, c, l2)
    table.elements.append(top)
    table.actions[(top, 1)] = None
    table.actions[(top, 2)] = rank4_element(l1, 2, l1 - c - 1, c, l2) if l1 - c > 0 else None
    if (l1 - l2 - c) % 2 == 0:
        table.actions[(top, 3)] = rank4_top(l1, c - 1, l2) if c > 0 else None
    else:
        table.actions[(top, 3)] = rank4_top(l1, c + 1, l2)


def rank4_row_table(l: int) -> LowRankTable:
    table = LowRankTable(n=4, shape=Partition.of(l) if l else Partition())
    for a in (1, 2):
        for c in range(l):
            for b in range(l - c):
                t = rank4_element(l, a, b, c)
                table.elements.append(t)
                table.actions[(t, 1)] = rank4_element(l, 3 - a, b, c)
                _rank4_b2(table, l, 0, a, b, c)
                if b % 2 == 0:
                    table.actions[(t, 3)] = rank4_element(l, a, b + 1, c - 1) if c > 0 else None
                else:
                    table.actions[(t, 3)] = rank4_element(l, a, b - 1, c + 1)
    for c in range(l + 1):
        _rank4_top_actions(table, l, 0, c)
    return table


def rank4_two_row_table(l1: int, l2: int) -> LowRankTable:
    """The parametrised elements plus their K1 images; B̃_i K1 = K1 B̃_i fills in the latter."""
    if not l1 >= l2 > 0:
        raise ValueError(f"two-row table needs l1 >= l2 > 0, got ({l1}, {l2})")
    table = LowRankTable(n=4, shape=Partition.of(l1, l2))
    for a in (1, 2):
        for c in range(l1 - l2 + 1):
            for b in range(l1 - c):
                t = rank4_element(l1, a, b, c, l2)
                table.elements.append(t)
                table.actions[(t, 1)] = rank4_element(l1, 3 - a, b, c, l2)
                _rank4_b2(table, l1, l2, a, b, c)
                if b < l2:
                    image = k1(rank4_element(l1, 3 - a, b, c, l2))
                elif (b - l2) % 2 == 0:
                    image = rank4_element(l1, a, b + 1, c - 1, l2) if c > 0 else None
                else:
                    image = rank4_element(l1, a, b - 1, c + 1, l2)
                table.actions[(t, 3)] = image
    for c in range(l1 - l2 + 1):
        _rank4_top_actions(table, l1, l2, c)
    keys = list(table.elements)
    for t in keys:
        twin = k1(t)
        table.elements.append(twin)
        for i in (1, 2, 3):
            image = table.actions[(t, i)]
            table.actions[(twin, i)] = None if image is None else k1(image)
    return table

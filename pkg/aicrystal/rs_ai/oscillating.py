"""so_n-oscillating tableaux: enumeration and the Q-encoding in both directions."""

from __future__ import annotations

from collections.abc import Iterator

from pydantic import ValidationError

from aicrystal.errors import InvalidOscillatingTableauError, InvalidQSymbolError
from aicrystal.models import (
    AIQSymbol,
    OscillatingTableau,
    OTStep,
    Partition,
    QMark,
    Rows,
    Sign,
    mark_high,
    oscillating_violations,
    so_rank,
    tableau_of,
)
from aicrystal.tableaux.insertion import bump, unbump
from aicrystal.tableaux.partitions import neighbours


def next_steps(n: int, shape: Partition) -> list[OTStep]:
    """Every (shape, sign) allowed right after ``shape``."""
    m = so_rank(n)
    options: list[OTStep] = []
    if n % 2 == 1 and shape.length == m:
        options.append(OTStep.model_construct(shape=shape, sign=Sign.ZERO))
    for sigma in neighbours(shape, m):
        if n % 2 == 0 and shape.length == m and sigma.length == m - 1:
            options.append(OTStep.model_construct(shape=sigma, sign=Sign.PLUS))
            options.append(OTStep.model_construct(shape=sigma, sign=Sign.MINUS))
        else:
            options.append(OTStep.model_construct(shape=sigma, sign=Sign.ZERO))
    options.sort(key=lambda s: (s.shape.parts, s.sign.value))
    return options


def _walks(n: int, d: int, prefix: list[OTStep]) -> Iterator[tuple[OTStep, ...]]:
    if len(prefix) == d + 1:
        yield tuple(prefix)
        return
    for step in next_steps(n, prefix[-1].shape):
        prefix.append(step)
        yield from _walks(n, d, prefix)
        prefix.pop()


def enumerate_oscillating(
    n: int, d: int, shape: Partition | None = None
) -> tuple[OscillatingTableau, ...]:
    """OT_n of length d (optionally only those ending at ``shape``), in walk order."""
    start = [OTStep.model_construct(shape=Partition(), sign=Sign.ZERO)]
    found = (
        OscillatingTableau.model_construct(n=n, steps=steps)
        for steps in _walks(n, d, start)
    )
    return tuple(ot for ot in found if shape is None or ot.shape == shape)


def check_oscillating(ot: OscillatingTableau) -> None:
    problems = oscillating_violations(ot.n, ot.steps)
    if problems:
        raise InvalidOscillatingTableauError("; ".join(problems))


# ---------------------------------------------------------------------------
# OT <-> (Q1, Q2)
# ---------------------------------------------------------------------------

def _changed_row(small: Partition, large: Partition) -> int:
    return next(r for r in range(1, large.length + 1) if large.part(r) != small.part(r))


def ot_to_q(ot: OscillatingTableau) -> AIQSymbol:
    """Q(rho): record growth in Q1, equal steps as {k}, shrinks as {l, k[, sign]}."""
    check_oscillating(ot)
    q1: Rows = ()
    q2: list[QMark] = []
    for k in range(1, len(ot.steps)):
        prev, cur, sign = ot.steps[k - 1].shape, ot.steps[k].shape, ot.steps[k].sign
        if cur == prev:
            q2.append((k,))
        elif prev.covered_by(cur):
            r = _changed_row(prev, cur)
            rows = [list(row) for row in q1] + [[]]
            rows[r - 1].append(k)
            q1 = tuple(tuple(row) for row in rows if row)
        else:
            r = _changed_row(cur, prev)
            q1, l = unbump(q1, (r, prev.part(r)))
            q2.append((l, k) if sign is Sign.ZERO else (l, k, sign.value))
    return AIQSymbol.model_construct(q1=tableau_of(ot.length, q1), q2=tuple(q2))


def _drop_entry(rows: Rows, k: int) -> Rows:
    for r, row in enumerate(rows):
        if row and row[-1] == k and (r + 1 == len(rows) or len(rows[r + 1]) < len(row)):
            out = [list(x) for x in rows]
            out[r].pop()
            return tuple(tuple(x) for x in out if x)
    raise InvalidQSymbolError(f"{k} is not at a corner of Q1")


def q_to_ot(q: AIQSymbol, n: int) -> OscillatingTableau:
    """Decode (Q1, Q2) by peeling off d, d-1, ..., 1.

    At step k the rows hold Q1 as it stood after step k: k is either still an
    entry there (growth) or the top of a mark, whose low entry is bumped back in.
    """
    by_high = {mark_high(mark): mark for mark in q.q2}
    rows = q.q1.rows
    steps: list[OTStep] = []
    for k in range(q.length, 0, -1):
        shape = Partition.model_construct(parts=tuple(len(row) for row in rows))
        mark = by_high.get(k)
        sign = Sign.ZERO
        if any(k in row for row in rows):
            rows = _drop_entry(rows, k)
        elif mark is None:
            raise InvalidQSymbolError(f"{k} is neither in Q1 nor the top of a mark")
        elif len(mark) >= 2:
            rows, _ = bump(rows, mark[0])
            if len(mark) == 3:
                sign = Sign(mark[2])
        steps.append(OTStep.model_construct(shape=shape, sign=sign))
    steps.append(OTStep.model_construct(shape=Partition(), sign=Sign.ZERO))
    if rows:
        raise InvalidQSymbolError("Q1 is not emptied by the marks")
    try:
        return OscillatingTableau(n=n, steps=tuple(reversed(steps)))
    except ValidationError as exc:
        raise InvalidQSymbolError(f"(Q1, Q2) decodes to an invalid walk: {exc}") from exc

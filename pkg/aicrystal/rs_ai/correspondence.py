"""The RS^AI correspondence.

    P^AI(w) = std(P(w))
    Q^AI(w) = (Q1, Q2) recorded from the shapes rho^k = sh(P^AI(w_1 ... w_k))

``rs_ai_inverse`` walks the oscillating tableau backwards: at each step it
looks for the unique T ⊗ l in SST_n^AI(rho^{k-1}) ⊗ SST_n(1) that standardizes
to the current tableau with the recorded sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from aicrystal.errors import InsertionSchemeError, NoPreimageError
from aicrystal.kmatrix.standardization import enumerate_sst_ai, is_ai_tableau, std_rows
from aicrystal.log import get_logger
from aicrystal.models import (
    AIQSymbol,
    OscillatingTableau,
    OTStep,
    Partition,
    QMark,
    Rows,
    Sign,
    Tableau,
    Word,
    so_rank,
    tableau_of,
    word_of,
)
from aicrystal.tableaux.insertion import bump, p_rows, rs, unbump

logger = get_logger(__name__)


@dataclass(frozen=True)
class AIInsertionStep:
    """One column of the RS^AI transcript."""

    k: int
    letter: int
    p_ai: Tableau
    q1: Tableau
    mark: QMark | None
    sign: Sign


def _shape(rows: Rows) -> Partition:
    return Partition.model_construct(parts=tuple(len(row) for row in rows))


def _grow(q1: Rows, row: int, k: int) -> Rows:
    rows = [list(r) for r in q1] + [[]]
    rows[row - 1].append(k)
    return tuple(tuple(r) for r in rows if r)


def p_ai(w: Word) -> Tableau:
    return tableau_of(w.n, std_rows(w.n, p_rows(w.letters)))


def q_ai_steps(w: Word) -> list[AIInsertionStep]:
    n = w.n
    m = so_rank(n)
    p: Rows = ()
    prev_ai: Rows = ()
    q1: Rows = ()
    transcript: list[AIInsertionStep] = []
    for k, x in enumerate(w.letters, 1):
        p, _ = bump(p, x)
        cur_ai = std_rows(n, p)
        prev, cur = _shape(prev_ai), _shape(cur_ai)
        mark: QMark | None = None
        sign = Sign.ZERO
        if cur == prev:
            mark = (k,)
        elif prev.covered_by(cur):
            row = next(r for r in range(1, cur.length + 1) if cur.part(r) != prev.part(r))
            q1 = _grow(q1, row, k)
        elif cur.covered_by(prev):
            row = next(r for r in range(1, prev.length + 1) if cur.part(r) != prev.part(r))
            q1, l = unbump(q1, (row, prev.part(row)))
            if n % 2 == 0 and prev.length == m > cur.length:
                tall = len(bump(prev_ai, x)[0]) > m
                sign = Sign.PLUS if tall else Sign.MINUS
                mark = (l, k, sign.value)
            else:
                mark = (l, k)
        else:
            logger.error("insertion_scheme_broken", n=n, k=k, prev=prev, cur=cur)
            raise InsertionSchemeError(f"step {k}: shapes {prev} and {cur} are not adjacent")
        transcript.append(
            AIInsertionStep(
                k=k,
                letter=x,
                p_ai=tableau_of(n, cur_ai),
                q1=tableau_of(k, q1),
                mark=mark,
                sign=sign,
            )
        )
        prev_ai = cur_ai
    return transcript


def q_ai(w: Word) -> tuple[AIQSymbol, OscillatingTableau]:
    """Q^AI(w) together with the oscillating tableau ((rho^k, s^k))_k it encodes."""
    transcript = q_ai_steps(w)
    steps = [OTStep.model_construct(shape=Partition(), sign=Sign.ZERO)]
    steps.extend(
        OTStep.model_construct(shape=step.p_ai.shape, sign=step.sign) for step in transcript
    )
    q1 = transcript[-1].q1 if transcript else tableau_of(0, ())
    marks = tuple(step.mark for step in transcript if step.mark is not None)
    symbol = AIQSymbol.model_construct(q1=q1, q2=marks)
    return symbol, OscillatingTableau.model_construct(n=w.n, steps=tuple(steps))


def rs_ai(w: Word) -> tuple[Tableau, OscillatingTableau]:
    """(P^AI(w), oscillating tableau of Q^AI(w))."""
    _, ot = q_ai(w)
    return p_ai(w), ot


def _preimages(n: int, prev: Partition, current: Rows, sign: Sign) -> list[tuple[Tableau, int]]:
    m = so_rank(n)
    found: list[tuple[Tableau, int]] = []
    for t in enumerate_sst_ai(n, prev):
        for letter in range(1, n + 1):
            bumped, _ = bump(t.rows, letter)
            if std_rows(n, bumped) != current:
                continue
            if sign is not Sign.ZERO and (sign is Sign.PLUS) != (len(bumped) > m):
                continue
            found.append((t, letter))
    return found


def rs_ai_inverse(p: Tableau, ot: OscillatingTableau) -> Word:
    """The unique w with rs_ai(w) = (p, ot)."""
    n = ot.n
    if p.n != n:
        raise NoPreimageError(f"P lives over [1, {p.n}] but the walk is for n={n}")
    if p.shape != ot.shape:
        raise NoPreimageError(f"P has shape {p.shape}, the walk ends at {ot.shape}")
    if not p.is_semistandard() or not is_ai_tableau(p):
        raise NoPreimageError(f"{p.label} is not an AI-tableau")
    current = p.rows
    letters: list[int] = []
    for k in range(ot.length, 0, -1):
        found = _preimages(n, ot.steps[k - 1].shape, current, ot.steps[k].sign)
        if len(found) != 1:
            raise NoPreimageError(f"step {k}: {len(found)} candidates for {tableau_of(n, current)}")
        t, letter = found[0]
        letters.append(letter)
        current = t.rows
    w = word_of(n, tuple(reversed(letters)))
    back_p, back_ot = rs_ai(w)
    if back_p != p or back_ot.sort_key != ot.sort_key:
        raise NoPreimageError(f"recovered word {w.label} does not reproduce the pair")
    return w


def gl_q_of_ot(ot: OscillatingTableau) -> Tableau:
    """Q(Q'): the gl recording tableau of any word with oscillating tableau ``ot``.

    Computed from the least P in SST_n^AI(sh ot); the result does not depend on P.
    """
    anchor = enumerate_sst_ai(ot.n, ot.shape)[0]
    return rs(rs_ai_inverse(anchor, ot))[1]

"""Pydantic models for partitions, tableaux, words, weights and RS^AI recording data.

All models are frozen: values are hashable, safe to share between threads and
usable as dict keys and set members.  Algorithms that produce values already
known to be valid build them through ``model_construct`` (see ``tableau_of``).
"""

from __future__ import annotations

import enum
from typing import Any, Literal, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_serializer,
    model_validator,
)

from aicrystal.errors import RankError

Rows = tuple[tuple[int, ...], ...]


def so_rank(n: int) -> int:
    """Rank m of so_n: n/2 for even n, (n-1)/2 for odd n."""
    if n < 3:
        raise RankError(f"so_n needs n >= 3, got n={n}")
    return n // 2


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class Sign(str, enum.Enum):
    ZERO = "0"
    PLUS = "+"
    MINUS = "-"


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

class Partition(BaseModel):
    """Weakly decreasing sequence of positive integers; serialises as a plain list."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _accept_sequence(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            return {"parts": tuple(data)}
        return data

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        return parts

    @model_serializer
    def _serialize(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(parts=tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse "2,1"; "" and "0" both mean the empty partition, trailing zeros are dropped."""
        text = text.strip()
        if not text:
            return cls()
        values = [int(tok) for tok in text.split(",")]
        while values and values[-1] == 0:
            values.pop()
        return cls(parts=tuple(values))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """i-th part (1-based), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def column_lengths(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    def cells(self) -> tuple[tuple[int, int], ...]:
        """D(lambda) as 1-based (row, column) pairs in row-major order."""
        return tuple((i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1))

    def contains(self, other: Partition) -> bool:
        """True iff D(other) is a subset of D(self)."""
        if other.length > self.length:
            return False
        return all(other.part(i) <= self.part(i) for i in range(1, other.length + 1))

    def covered_by(self, other: Partition) -> bool:
        """self ◁ other: other is self with exactly one cell added."""
        return other.size == self.size + 1 and other.contains(self)

    def removable_rows(self) -> tuple[int, ...]:
        return tuple(
            i for i in range(1, self.length + 1) if self.part(i) > self.part(i + 1)
        )

    def addable_rows(self) -> tuple[int, ...]:
        return tuple(
            i for i in range(1, self.length + 2) if i == 1 or self.part(i - 1) > self.part(i)
        )

    def add_cell(self, row: int) -> Partition:
        parts = list(self.parts) + [0]
        parts[row - 1] += 1
        return Partition.model_construct(parts=tuple(p for p in parts if p))

    def remove_cell(self, row: int) -> Partition:
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition.model_construct(parts=tuple(p for p in parts if p))

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partition_of(parts: tuple[int, ...]) -> Partition:
    """Build a Partition from parts already known to be valid."""
    return Partition.model_construct(parts=parts)


# ---------------------------------------------------------------------------
# Tableaux and words
# ---------------------------------------------------------------------------

class Tableau(BaseModel):
    """Row-major ragged grid of letters in [1, n].

    JSON: ``{"n": 4, "shape": [4, 2, 1], "rows": [[1, 2, 3, 3], [2, 3], [4]]}``.
    Semistandardness is a predicate, not an invariant, so that the
    operations rejecting non-semistandard input can be exercised.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    rows: Rows = ()

    @model_validator(mode="before")
    @classmethod
    def _accept_shape_key(cls, data: Any) -> Any:
        if isinstance(data, dict) and "shape" in data:
            data = dict(data)
            shape = list(data.pop("shape"))
            rows = data.get("rows", ())
            if shape != [len(row) for row in rows]:
                raise ValueError(f"shape {shape} does not match the row lengths")
        return data

    @model_validator(mode="after")
    def _check_grid(self) -> Tableau:
        lengths = [len(row) for row in self.rows]
        if any(k == 0 for k in lengths):
            raise ValueError("tableau rows must be non-empty")
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths must weakly decrease: {lengths}")
        for row in self.rows:
            for x in row:
                if not 1 <= x <= self.n:
                    raise ValueError(f"entry {x} outside [1, {self.n}]")
        return self

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "shape": [len(row) for row in self.rows],
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_rows(cls, n: int, rows: Any) -> Tableau:
        return cls(n=n, rows=tuple(tuple(row) for row in rows))

    @classmethod
    def empty(cls, n: int) -> Tableau:
        return cls.model_construct(n=n, rows=())

    @property
    def shape(self) -> Partition:
        return Partition.model_construct(parts=tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def columns(self) -> Rows:
        """Columns C_1, C_2, ... each read top to bottom."""
        if not self.rows:
            return ()
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        )

    def entry(self, i: int, j: int) -> int:
        """t_{i,j} with 1-based coordinates."""
        return self.rows[i - 1][j - 1]

    @property
    def row_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def is_standard(self) -> bool:
        word = self.row_word
        return len(set(word)) == len(word) and self.is_semistandard()

    @property
    def label(self) -> str:
        if not self.rows:
            return "∅"
        sep = "" if self.n <= 9 else ","
        return "/".join(sep.join(str(x) for x in row) for row in self.rows)

    def __str__(self) -> str:
        return self.label


def tableau_of(n: int, rows: Rows) -> Tableau:
    """Build a Tableau from rows already known to be valid."""
    return Tableau.model_construct(n=n, rows=rows)


class Word(BaseModel):
    """Finite sequence of letters in [1, n]; JSON ``{"n": 4, "letters": [4, 2, 3]}``."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    letters: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_letters(self) -> Word:
        for x in self.letters:
            if not 1 <= x <= self.n:
                raise ValueError(f"letter {x} outside [1, {self.n}]")
        return self

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Word:
        text = text.strip()
        letters = tuple(int(tok) for tok in text.split(",")) if text else ()
        if n is None:
            n = max(letters, default=1)
        return cls(n=n, letters=letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: Word) -> Word:
        """Concatenation w1 * w2."""
        return word_of(max(self.n, other.n), self.letters + other.letters)

    @property
    def label(self) -> str:
        sep = "" if self.n <= 9 else ","
        return sep.join(str(x) for x in self.letters) or "∅"

    def __str__(self) -> str:
        return self.label


def word_of(n: int, letters: tuple[int, ...]) -> Word:
    """Build a Word from letters already known to be valid."""
    return Word.model_construct(n=n, letters=letters)


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

class GlWeight(BaseModel):
    model_config = ConfigDict(frozen=True)

    coordinates: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coordinates)


class SoWeight(BaseModel):
    """Integral so_n weight in the epsilon basis, length m."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=3)
    coordinates: tuple[int, ...]

    @model_validator(mode="after")
    def _check_length(self) -> SoWeight:
        m = so_rank(self.n)
        if len(self.coordinates) != m:
            raise ValueError(f"so_{self.n} weights have {m} coordinates, got {self.coordinates}")
        return self

    def is_dominant(self) -> bool:
        nu = self.coordinates
        if self.n % 2 == 1:
            return all(a >= b for a, b in zip(nu, nu[1:])) and nu[-1] >= 0
        head_ok = all(a >= b for a, b in zip(nu[:-1], nu[1:-1]))
        return head_ok and (len(nu) == 1 or nu[-2] >= abs(nu[-1]))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coordinates) + ")"


# ---------------------------------------------------------------------------
# Oscillating tableaux
# ---------------------------------------------------------------------------

class OTStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: Partition = Field(default_factory=Partition)
    sign: Sign = Sign.ZERO

    @field_validator("sign", mode="before")
    @classmethod
    def _sign_from_zero(cls, value: Any) -> Any:
        return Sign.ZERO if value in (0, "0") else value

    @field_serializer("sign")
    def _sign_to_json(self, sign: Sign) -> int | str:
        return 0 if sign is Sign.ZERO else sign.value


def oscillating_violations(n: int, steps: tuple[OTStep, ...]) -> list[str]:
    """Every rule broken by the walk ``steps``; empty when it is an oscillating tableau."""
    m = so_rank(n)
    problems: list[str] = []
    if not steps:
        return ["an oscillating tableau has at least the step 0"]
    if steps[0].shape.parts or steps[0].sign is not Sign.ZERO:
        problems.append("step 0 must be (∅, 0)")
    for k, step in enumerate(steps):
        if step.shape.length > m:
            problems.append(f"step {k}: shape {step.shape} has more than m={m} rows")
    for k in range(1, len(steps)):
        prev, cur = steps[k - 1].shape, steps[k].shape
        if cur == prev:
            if n % 2 == 0 or cur.length != m:
                problems.append(f"step {k}: equal shapes need n odd and length m")
        elif not (prev.covered_by(cur) or cur.covered_by(prev)):
            problems.append(f"step {k}: {prev} and {cur} differ by more than one cell")
        signed = n % 2 == 0 and prev.length == m and cur.length == m - 1
        if signed and steps[k].sign is Sign.ZERO:
            problems.append(f"step {k}: leaving length m needs a sign")
        if not signed and steps[k].sign is not Sign.ZERO:
            problems.append(f"step {k}: sign {steps[k].sign.value} not allowed here")
    return problems


class OscillatingTableau(BaseModel):
    """so_n-oscillating tableau: the walk ((rho^k, s^k)) for k = 0..d."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=3)
    steps: tuple[OTStep, ...] = (OTStep(),)

    @model_validator(mode="after")
    def _check_walk(self) -> OscillatingTableau:
        problems = oscillating_violations(self.n, self.steps)
        if problems:
            raise ValueError("; ".join(problems))
        return self

    @classmethod
    def from_pairs(cls, n: int, pairs: Any) -> OscillatingTableau:
        """Build from ``(parts, sign)`` pairs, e.g. ``[((), 0), ((1,), 0)]``."""
        return cls(
            n=n,
            steps=tuple(OTStep(shape=Partition(parts=tuple(p)), sign=s) for p, s in pairs),
        )

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def shape(self) -> Partition:
        return self.steps[-1].shape

    @property
    def shapes(self) -> tuple[Partition, ...]:
        return tuple(step.shape for step in self.steps)

    @property
    def signs(self) -> tuple[Sign, ...]:
        return tuple(step.sign for step in self.steps)

    @property
    def sort_key(self) -> tuple:
        return tuple((step.shape.parts, step.sign.value) for step in self.steps)

    @property
    def label(self) -> str:
        """Shapes in order, a shrink step to m-1 rows suffixed with its sign."""
        return " ".join(
            str(s.shape) + ("" if s.sign is Sign.ZERO else s.sign.value) for s in self.steps
        )

    def __str__(self) -> str:
        return self.label


# ---------------------------------------------------------------------------
# Q^AI symbols
# ---------------------------------------------------------------------------

# {k}, {l, k} or {l, k, ±} with l < k
QMark = Union[tuple[int], tuple[int, int], tuple[int, int, Literal["+", "-"]]]


def mark_high(mark: QMark) -> int:
    return mark[1] if len(mark) >= 2 else mark[0]


def mark_integers(mark: QMark) -> tuple[int, ...]:
    return tuple(x for x in mark if isinstance(x, int))


class AIQSymbol(BaseModel):
    """(Q1, Q2): a standard tableau plus a set of marked subsets, sorted by largest member."""

    model_config = ConfigDict(frozen=True)

    q1: Tableau
    q2: tuple[QMark, ...] = ()

    @field_validator("q2")
    @classmethod
    def _sort_marks(cls, marks: tuple[QMark, ...]) -> tuple[QMark, ...]:
        for mark in marks:
            if len(mark) >= 2 and not mark[0] < mark[1]:
                raise ValueError(f"mark {mark} needs l < k")
        return tuple(sorted(marks, key=mark_high))

    @model_validator(mode="after")
    def _check_partition_of_range(self) -> AIQSymbol:
        if not self.q1.is_standard():
            raise ValueError("q1 must be a standard tableau")
        members = list(self.q1.row_word)
        for mark in self.q2:
            members.extend(mark_integers(mark))
        if sorted(members) != list(range(1, len(members) + 1)):
            raise ValueError("entries of q1 and q2 must partition [1, d]")
        return self

    @property
    def length(self) -> int:
        return self.q1.size + sum(len(mark_integers(mark)) for mark in self.q2)

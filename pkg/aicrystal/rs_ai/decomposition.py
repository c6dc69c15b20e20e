"""Components of SST_n^AI(rho) ⊗ SST_n(1) against the four-case insertion table.

    case 1: n even, rho_m != 1   sigma with rho ◁ sigma or sigma ◁ rho
    case 2: n even, rho_m == 1   those sigma of length m, plus rho' twice (labelled +/-)
    case 3: n odd,  rho_m == 0   sigma with rho ◁ sigma or sigma ◁ rho
    case 4: n odd,  rho_m != 0   as case 3, plus sigma = rho

Each element T ⊗ l is labelled by sh(std(T ← l)); in case 2 the shrunken
label carries + when l(sh(T ← l)) > m and - otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from aicrystal.ai_crystal.structure import AITensor, ai_generators
from aicrystal.gl_crystal.components import components
from aicrystal.kmatrix.standardization import enumerate_sst_ai, require_rank_shape, std_rows
from aicrystal.models import Partition, Sign, Tableau, tableau_of
from aicrystal.tableaux.insertion import bump
from aicrystal.tableaux.partitions import neighbours

Label = tuple[Partition, Sign]


@dataclass
class StepComponent:
    label: Label
    size: int
    expected_size: int
    bijective: bool
    uniform: bool

    @property
    def ok(self) -> bool:
        return self.uniform and self.bijective and self.size == self.expected_size


@dataclass
class StepDecomposition:
    n: int
    rho: Partition
    case: int
    components: list[StepComponent] = field(default_factory=list)
    expected: list[Label] = field(default_factory=list)
    carrier_size: int = 0

    @property
    def found(self) -> list[Label]:
        return sorted((c.label for c in self.components), key=_label_key)

    @property
    def matches(self) -> bool:
        return (
            self.found == self.expected
            and all(c.ok for c in self.components)
            and sum(c.size for c in self.components) == self.carrier_size
        )

    def summary(self) -> str:
        labels = ", ".join(_label_text(c.label) for c in self.components)
        return f"n={self.n} rho={self.rho} case {self.case}: {labels}"


def _label_key(label: Label) -> tuple:
    return (label[0].parts, label[1].value)


def _label_text(label: Label) -> str:
    shape, sign = label
    return str(shape) if sign is Sign.ZERO else f"{shape}{sign.value}"


def box(n: int, letter: int) -> Tableau:
    return tableau_of(n, ((letter,),))


def step_case(n: int, rho: Partition) -> int:
    m = require_rank_shape(n, rho)
    last = rho.part(m)
    if n % 2 == 0:
        return 2 if last == 1 else 1
    return 4 if last else 3


def expected_labels(n: int, rho: Partition) -> list[Label]:
    m = require_rank_shape(n, rho)
    case = step_case(n, rho)
    shapes = list(neighbours(rho, m))
    labels: list[Label] = []
    if case == 2:
        labels = [(s, Sign.ZERO) for s in shapes if s.length == m]
        shorter = rho.remove_cell(m)
        labels += [(shorter, Sign.PLUS), (shorter, Sign.MINUS)]
    else:
        labels = [(s, Sign.ZERO) for s in shapes]
        if case == 4:
            labels.append((rho, Sign.ZERO))
    return sorted(labels, key=_label_key)


def step_label(b: AITensor, rho: Partition) -> Label:
    """Label of T ⊗ l under T ⊗ l -> std(T ← l), with the +/- split of case 2."""
    n = b.n
    m = require_rank_shape(n, rho)
    bumped, _ = bump(b.left.rows, b.right.rows[0][0])
    shape = Partition.model_construct(parts=tuple(len(r) for r in std_rows(n, bumped)))
    if step_case(n, rho) == 2 and shape.length < m:
        return shape, Sign.PLUS if len(bumped) > m else Sign.MINUS
    return shape, Sign.ZERO


def step_image(b: AITensor) -> Tableau:
    bumped, _ = bump(b.left.rows, b.right.rows[0][0])
    return tableau_of(b.n, std_rows(b.n, bumped))


def tensor_step_decompose(n: int, rho: Partition) -> StepDecomposition:
    report = StepDecomposition(
        n=n, rho=rho, case=step_case(n, rho), expected=expected_labels(n, rho)
    )
    carrier = [
        AITensor(t, box(n, letter))
        for t in enumerate_sst_ai(n, rho)
        for letter in range(1, n + 1)
    ]
    report.carrier_size = len(carrier)
    for comp in components(carrier, ai_generators(n)):
        labels = {step_label(b, rho) for b in comp}
        label = min(labels, key=_label_key)
        target = enumerate_sst_ai(n, label[0])
        images = {step_image(b) for b in comp}
        report.components.append(
            StepComponent(
                label=label,
                size=len(comp),
                expected_size=len(target),
                bijective=len(images) == len(comp) and images == set(target),
                uniform=len(labels) == 1,
            )
        )
    report.components.sort(key=lambda c: _label_key(c.label))
    return report

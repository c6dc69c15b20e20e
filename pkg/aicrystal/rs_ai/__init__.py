"""RS^AI, oscillating tableaux, the insertion-step decomposition and branching."""

from aicrystal.rs_ai.branching import BranchingFiber, BranchingResult, branch, t_lambda
from aicrystal.rs_ai.correspondence import (
    AIInsertionStep,
    gl_q_of_ot,
    p_ai,
    q_ai,
    q_ai_steps,
    rs_ai,
    rs_ai_inverse,
)
from aicrystal.rs_ai.decomposition import (
    StepComponent,
    StepDecomposition,
    expected_labels,
    step_case,
    tensor_step_decompose,
)
from aicrystal.rs_ai.oscillating import (
    check_oscillating,
    enumerate_oscillating,
    next_steps,
    ot_to_q,
    q_to_ot,
)

__all__ = [
    "AIInsertionStep",
    "BranchingFiber",
    "BranchingResult",
    "StepComponent",
    "StepDecomposition",
    "branch",
    "check_oscillating",
    "enumerate_oscillating",
    "expected_labels",
    "gl_q_of_ot",
    "next_steps",
    "ot_to_q",
    "p_ai",
    "q_ai",
    "q_ai_steps",
    "q_to_ot",
    "rs_ai",
    "rs_ai_inverse",
    "step_case",
    "t_lambda",
]

"""Verification suites behind `aicrystal verify`.

Each suite takes its ``SuiteLimits`` and returns check records; the runner
collects them into a ``VerificationReport``.  Suites are exhaustive over the
desk-scale bounds and compare library output against worked examples, closed
forms and structural identities.
"""

from __future__ import annotations

from collections.abc import Callable
from itertools import combinations, product

from aicrystal.ai_crystal import (
    AITensor,
    ai_axiom_violations,
    ai_component,
    ai_variables,
    btil,
    ch_ai,
    deg,
    expected_singular_set,
    is_singular,
    morphism_violations,
    odd_degrees,
    rank3_row_table,
    rank4_row_table,
    rank4_two_row_table,
    so_dimension,
    so_highest_weights,
    t_rho,
)
from aicrystal.config import SuiteLimits
from aicrystal.errors import AICrystalError
from aicrystal.gl_crystal import (
    eps,
    etil,
    flatten,
    ftil,
    phi,
    stembridge_violations,
    tensor_of_letters,
)
from aicrystal.kmatrix import (
    column_btil,
    column_deg,
    column_tableau,
    enumerate_sst_ai,
    is_ai_tableau,
    k1,
    k_column,
    k_complement,
    k_tensor,
    std,
)
from aicrystal.laurent import LaurentPolynomial
from aicrystal.models import (
    OscillatingTableau,
    Partition,
    Sign,
    Tableau,
    Word,
    so_rank,
    word_of,
)
from aicrystal.rs_ai import (
    branch,
    enumerate_oscillating,
    gl_q_of_ot,
    ot_to_q,
    q_ai,
    q_to_ot,
    rs_ai,
    rs_ai_inverse,
    t_lambda,
    tensor_step_decompose,
)
from aicrystal.rs_ai.decomposition import box, step_label
from aicrystal.tableaux import (
    column_pair_conditions,
    column_reading,
    enumerate_ssyt,
    p_symbol,
    p_symbol_tensor,
    partitions_up_to,
    row_insert,
    rs,
)
from aicrystal.verify.harness import CheckResult, check, no_violations

Suite = Callable[[SuiteLimits], list[CheckResult]]


def _t(n: int, *rows: tuple[int, ...]) -> Tableau:
    return Tableau.from_rows(n, rows)


def _w(n: int, *letters: int) -> Word:
    return Word(n=n, letters=letters)


def _ns(limits: SuiteLimits) -> range:
    return range(3, limits.max_n + 1)


# ---------------------------------------------------------------------------
# examples
# ---------------------------------------------------------------------------

def examples_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "examples"
    out: list[CheckResult] = []
    t = _t(4, (1, 2, 3, 3), (2, 3), (4,))
    out.append(check(s, "column_reading", column_reading(t).letters, (4, 2, 1, 3, 2, 3, 3)))
    out.append(check(s, "insert_1", row_insert(t, 1).label, "1133/22/3/4"))
    out.append(check(s, "insert_2", row_insert(t, 2).label, "1223/233/4"))
    out.append(check(s, "insert_3", row_insert(t, 3).label, "12333/23/4"))

    p, q = rs(_w(4, 4, 2, 3, 1, 3, 2))
    out.append(check(s, "rs_p", p.label, "123/23/4"))
    out.append(check(s, "rs_q", q.label, "135/26/4"))

    tensor = p_symbol_tensor(_t(4, (1, 3), (3,)), _t(4, (1, 2), (2, 3), (4,)))
    out.append(check(s, "p_symbol_tensor", tensor.label, "112/233/34"))

    square = _t(4, (2, 2), (3, 3))
    out.append(check(s, "k1_square", k1(square).label, "12/3/4"))
    out.append(check(s, "std_square", std(square).label, "22"))

    listing = [x.label for x in enumerate_sst_ai(3, Partition.of(2))]
    out.append(check(s, "sst3_ai_2", listing, ["12", "13", "22", "23", "33"]))
    listing = [x.label for x in enumerate_sst_ai(4, Partition.of(2, 1))]
    out.append(
        check(
            s,
            "sst4_ai_21",
            listing,
            [
                "12/3", "12/4", "13/2", "13/3", "13/4", "14/2", "14/3", "14/4",
                "22/3", "22/4", "23/3", "23/4", "24/3", "24/4", "33/4", "34/4",
            ],
        )
    )

    out.append(
        check(s, "ch_ai_sst3_1", ch_ai(enumerate_ssyt(3, Partition.of(1)), 1).to_text(),
              "y1 + 1 + y1^-1")
    )
    out.append(
        check(s, "ch_ai_sst4_1", ch_ai(enumerate_ssyt(4, Partition.of(1)), 2).to_text(),
              "y1 + y1^-1 + y3 + y3^-1")
    )

    w = _w(4, 1, 1, 4, 2, 1, 1, 1)
    symbol, ot = q_ai(w)
    out.append(check(s, "rsai_n4_p", rs_ai(w)[0].label, "3"))
    out.append(check(s, "rsai_n4_q1", symbol.q1.label, "6"))
    out.append(check(s, "rsai_n4_q2", symbol.q2, ((1, 2), (3, 5, "+"), (4, 7, "-"))))
    out.append(
        check(
            s,
            "rsai_n4_ot",
            [(str(st.shape), st.sign.value) for st in ot.steps],
            [("∅", "0"), ("(1)", "0"), ("∅", "0"), ("(1)", "0"), ("(1,1)", "0"),
             ("(1)", "+"), ("(1,1)", "0"), ("(1)", "-")],
        )
    )
    w = _w(5, 1, 1, 4, 2, 1)
    symbol, _ = q_ai(w)
    out.append(check(s, "rsai_n5_p", rs_ai(w)[0].label, "3/5"))
    out.append(check(s, "rsai_n5_q1", symbol.q1.label, "3/4"))
    out.append(check(s, "rsai_n5_q2", symbol.q2, ((1, 2), (5,))))

    table = branch(3, Partition.of(2, 1)).multiplicities
    out.append(
        check(s, "branch_n3_21", {str(k): v for k, v in table.items()}, {"(1)": 1, "(2)": 1})
    )
    return out


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def _word_matches_tensor(n: int, length: int) -> list[str]:
    problems: list[str] = []
    for letters in product(range(1, n + 1), repeat=length):
        w = word_of(n, letters)
        b = tensor_of_letters(w)
        for i in range(1, n):
            if (eps(w, i), phi(w, i)) != (eps(b, i), phi(b, i)):
                problems.append(f"string lengths of {w.label} at {i}")
            for op in (etil, ftil):
                lhs, rhs = op(w, i), op(b, i)
                if (lhs is None) != (rhs is None) or (lhs is not None and lhs != flatten(rhs)):
                    problems.append(f"{op.__name__}_{i} on {w.label}")
    return problems


def _ai_tensor_matches_words(n: int) -> list[str]:
    problems: list[str] = []
    for left in enumerate_sst_ai(n, Partition.of(1)):
        for letter in range(1, n + 1):
            pair = AITensor(left, box(n, letter))
            w = word_of(n, (left.rows[0][0], letter))
            for i in range(1, n):
                if deg(pair, i) != deg(w, i):
                    problems.append(f"deg_{i} of {pair}")
                image, expected = btil(pair, i), btil(w, i)
                got = None if image is None else word_of(
                    n, image.left.row_word + image.right.row_word
                )
                if got != expected:
                    problems.append(f"B_{i} of {pair}")
    return problems


def axioms_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "axioms"
    out: list[CheckResult] = []
    for n in _ns(limits):
        for lm in partitions_up_to(limits.max_size, n):
            elements = enumerate_ssyt(n, lm)
            out.append(
                no_violations(s, f"stembridge_n{n}_{lm}", stembridge_violations(elements, n))
            )
            out.append(
                no_violations(s, f"ai_axioms_n{n}_{lm}", ai_axiom_violations(elements, n))
            )
        out.append(no_violations(s, f"word_tensor_rule_n{n}", _word_matches_tensor(n, 3)))
        out.append(no_violations(s, f"ai_tensor_rule_n{n}", _ai_tensor_matches_words(n)))
    return out


# ---------------------------------------------------------------------------
# counts
# ---------------------------------------------------------------------------

def counts_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "counts"
    out: list[CheckResult] = []
    top = limits.max_size
    for l in range(top + 1):
        shape = Partition.of(l) if l else Partition()
        out.append(check(s, f"sst3_ai_{l}", len(enumerate_sst_ai(3, shape)), 2 * l + 1))
        out.append(check(s, f"sst4_ai_{l}", len(enumerate_sst_ai(4, shape)), (l + 1) ** 2))
    for l1 in range(1, top + 1):
        for l2 in range(1, l1 + 1):
            out.append(
                check(
                    s,
                    f"sst4_ai_{l1}_{l2}",
                    len(enumerate_sst_ai(4, Partition.of(l1, l2))),
                    2 * (l1 - l2 + 1) * (l1 + l2 + 1),
                )
            )
    return out


# ---------------------------------------------------------------------------
# kmatrix
# ---------------------------------------------------------------------------

def _column_problems(n: int) -> list[str]:
    problems: list[str] = []
    for k in range(n + 1):
        for col in combinations(range(1, n + 1), k):
            if k_complement(k_complement(col, n), n) != col:
                problems.append(f"K∘K on {col}")
            t = column_tableau(col, n)
            for i in range(1, n):
                if column_deg(col, i) != deg(t, i):
                    problems.append(f"column deg_{i} on {col}")
                image = btil(t, i)
                closed = column_btil(col, i)
                if (None if closed is None else column_tableau(closed, n)) != image:
                    problems.append(f"column B_{i} on {col}")
    return problems


def _column_pair_problems(n: int) -> list[str]:
    problems: list[str] = []
    columns = [c for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]
    for c1 in columns:
        for c2 in columns:
            cond = column_pair_conditions(c1, c2, n)
            if cond.product_length < len(c1) or not cond.equivalent:
                problems.append(f"column pair {c1} {c2}")
    return problems


def kmatrix_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "kmatrix"
    out: list[CheckResult] = []
    for n in _ns(limits):
        m = so_rank(n)
        out.append(no_violations(s, f"columns_n{n}", _column_problems(n)))
        out.append(no_violations(s, f"column_pairs_n{n}", _column_pair_problems(n)))
        for k in range(n + 1):
            cols = [column_tableau(c, n) for c in combinations(range(1, n + 1), k)]
            out.append(no_violations(s, f"k_column_morphism_n{n}_k{k}",
                                     morphism_violations(k_column, cols, n)))
            pairs = [AITensor(c, box(n, x)) for c in cols for x in range(1, n + 1)]
            out.append(no_violations(s, f"k_tensor_morphism_n{n}_k{k}",
                                     morphism_violations(k_tensor, pairs, n)))
        for lm in partitions_up_to(limits.max_size, n):
            elements = enumerate_ssyt(n, lm)
            sizes = {k1(t).size - t.size for t in elements}
            out.append(check(s, f"k1_size_n{n}_{lm}", sizes or {n - 2 * lm.length},
                             {n - 2 * lm.length}))
            out.append(no_violations(s, f"k1_morphism_n{n}_{lm}",
                                     morphism_violations(k1, elements, n)))
            out.append(no_violations(s, f"std_morphism_n{n}_{lm}",
                                     morphism_violations(std, elements, n)))
            bad_std = [
                t.label for t in elements if not is_ai_tableau(std(t)) or std(std(t)) != std(t)
            ]
            out.append(no_violations(s, f"std_lands_in_ai_n{n}_{lm}", bad_std))
        for rho in partitions_up_to(limits.max_size, m):
            members = enumerate_sst_ai(n, rho)
            bad = [t.label for t in members if k1(k1(t)) != t]
            out.append(no_violations(s, f"k1_involution_n{n}_{rho}", bad))
            ai_twin = {is_ai_tableau(k1(t)) for t in members}
            out.append(check(s, f"k1_ai_iff_half_n{n}_{rho}", ai_twin,
                             {2 * rho.length == n}))
    return out


# ---------------------------------------------------------------------------
# theorem
# ---------------------------------------------------------------------------

def _degree_shape(b: Tableau, m: int) -> Partition | None:
    degrees = odd_degrees(b, m)
    if any(a < c for a, c in zip(degrees, degrees[1:])):
        return None
    return Partition.model_construct(parts=tuple(d for d in degrees if d))


def theorem_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "theorem"
    out: list[CheckResult] = []
    for n in _ns(limits):
        m = so_rank(n)
        for rho in partitions_up_to(limits.max_size, m):
            members = enumerate_sst_ai(n, rho)
            top = t_rho(n, rho)
            out.append(check(s, f"t_rho_is_ai_n{n}_{rho}", is_ai_tableau(top), True))
            out.append(check(s, f"t_rho_singular_n{n}_{rho}", is_singular(top, rho), True))
            out.append(check(s, f"connected_n{n}_{rho}", set(ai_component(top)), set(members)))

            singular = {}
            for b in members:
                sigma = _degree_shape(b, m)
                if sigma is not None and is_singular(b, sigma):
                    singular.setdefault(sigma, set()).add(b)
            expected = {rho: set(expected_singular_set(n, rho, rho))}
            out.append(check(s, f"singular_set_n{n}_{rho}",
                             {k: sorted(x.label for x in v) for k, v in singular.items()},
                             {k: sorted(x.label for x in v) for k, v in expected.items()}))

            if 2 * rho.length == n:
                walked = top
                for i in range(1, 2 * m, 2):
                    walked = None if walked is None else btil(walked, i)
                walked_label = None if walked is None else walked.label
                out.append(check(s, f"k1_t_rho_n{n}_{rho}", walked_label, k1(top).label))

            character = ch_ai(members, m)
            out.append(check(s, f"ch_integral_n{n}_{rho}", character.is_integral(), True))
            dims = sum(so_dimension(nu) for nu in so_highest_weights(n, rho))
            out.append(check(s, f"dimension_n{n}_{rho}", len(members), dims))
            dominant = all(nu.is_dominant() for nu in so_highest_weights(n, rho))
            out.append(check(s, f"highest_weights_dominant_n{n}_{rho}", dominant, True))
    return out


# ---------------------------------------------------------------------------
# lowrank
# ---------------------------------------------------------------------------

def lowrank_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "lowrank"
    out: list[CheckResult] = []
    tables = []
    for l in range(limits.max_size + 1):
        tables.append((f"rank3_{l}", rank3_row_table(l)))
        tables.append((f"rank4_{l}", rank4_row_table(l)))
    for l1 in range(1, limits.max_size + 1):
        for l2 in range(1, l1 + 1):
            tables.append((f"rank4_{l1}_{l2}", rank4_two_row_table(l1, l2)))
    for name, table in tables:
        out.append(no_violations(s, f"{name}_actions", table.mismatches()))
        carrier = enumerate_sst_ai(table.n, table.shape)
        out.append(check(s, f"{name}_elements", sorted(x.label for x in table.elements),
                         sorted(x.label for x in carrier)))
    return out


# ---------------------------------------------------------------------------
# rsai
# ---------------------------------------------------------------------------

def _word_problems(w: Word, gl_q_cache: dict[tuple, Tableau]) -> dict[str, str]:
    """Problems of one word, keyed by the check they belong to."""
    found: dict[str, str] = {}
    symbol, ot = q_ai(w)
    p, _ = rs_ai(w)
    if not is_ai_tableau(p) or p.shape != ot.shape:
        found["valid"] = f"{w.label}: P^AI {p.label}"
    if ot_to_q(ot) != symbol:
        found["q_encoding"] = w.label
    if rs_ai_inverse(p, ot) != w:
        found["inverse"] = w.label
    for i in range(1, w.n):
        moved = btil(w, i)
        if moved is None:
            if btil(p, i) is not None:
                found["equivariance"] = f"B_{i} {w.label}"
            continue
        p2, ot2 = rs_ai(moved)
        if p2 != btil(p, i) or ot2.sort_key != ot.sort_key:
            found["equivariance"] = f"B_{i} {w.label}"
    key = ot.sort_key
    if key not in gl_q_cache:
        gl_q_cache[key] = gl_q_of_ot(ot)
    if rs(w)[1] != gl_q_cache[key]:
        found["gl_q"] = w.label
    return found


def _decode_problem(ot: OscillatingTableau) -> str | None:
    try:
        decoded = q_to_ot(ot_to_q(ot), ot.n)
    except AICrystalError as exc:
        return f"{ot}: {exc}"
    return None if decoded.sort_key == ot.sort_key else f"{ot}: decodes to {decoded}"


def _rsai_checks(n: int, d: int) -> list[CheckResult]:
    s = "rsai"
    tag = f"n{n}_d{d}"
    problems: dict[str, list[str]] = {
        "valid": [], "q_encoding": [], "inverse": [], "equivariance": [], "gl_q": [],
    }
    seen: set = set()
    gl_q_cache: dict[tuple, Tableau] = {}
    for letters in product(range(1, n + 1), repeat=d):
        w = word_of(n, letters)
        try:
            p, ot = rs_ai(w)
            seen.add((p, ot.sort_key))
            found = _word_problems(w, gl_q_cache)
        except AICrystalError as exc:
            found = {"valid": f"{w.label}: {type(exc).__name__}: {exc}"}
        for name, problem in found.items():
            problems[name].append(problem)
    walks = enumerate_oscillating(n, d)
    expected_total = sum(len(enumerate_sst_ai(n, ot.shape)) for ot in walks)
    decode = [problem for problem in map(_decode_problem, walks) if problem]
    out = [
        check(s, f"injective_{tag}", len(seen), n**d),
        check(s, f"image_count_{tag}", expected_total, n**d),
        no_violations(s, f"decode_{tag}", decode),
    ]
    out.extend(no_violations(s, f"{name}_{tag}", found) for name, found in problems.items())
    return out


def rsai_suite(limits: SuiteLimits) -> list[CheckResult]:
    out: list[CheckResult] = []
    for n in _ns(limits):
        for d in range(limits.max_len + 1):
            out.extend(_rsai_checks(n, d))
    return out


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

def _criterion_problems(n: int, rho: Partition) -> list[str]:
    m = so_rank(n)
    shorter = rho.remove_cell(m)
    taller = Partition.model_construct(parts=rho.parts + (1,))
    chosen = set()
    for t in enumerate_sst_ai(n, rho):
        for letter in range(1, n + 1):
            inserted = row_insert(t, letter)
            if inserted.shape == taller and std(inserted).shape == shorter:
                chosen.add(AITensor(t, box(n, letter)))
    if not chosen:
        return [f"no element for rho={rho}"]
    component = set(ai_component(next(iter(chosen))))
    problems = []
    if component != chosen:
        problems.append(f"criterion set is not one component for rho={rho}")
    if {step_label(b, rho) for b in chosen} != {(shorter, Sign.PLUS)}:
        problems.append(f"criterion set is not the + copy for rho={rho}")
    if len(chosen) != len(enumerate_sst_ai(n, shorter)):
        problems.append(f"criterion set has {len(chosen)} elements for rho={rho}")
    return problems


def decomposition_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "decomposition"
    out: list[CheckResult] = []
    for n in _ns(limits):
        m = so_rank(n)
        for rho in partitions_up_to(limits.max_size, m):
            report = tensor_step_decompose(n, rho)
            out.append(
                check(s, f"step_n{n}_{rho}", report.matches, True, details=report.summary())
            )
            if n % 2 == 0 and rho.length == m and rho.part(m) == 1:
                out.append(no_violations(s, f"criterion_n{n}_{rho}", _criterion_problems(n, rho)))
    return out


# ---------------------------------------------------------------------------
# branching
# ---------------------------------------------------------------------------

def branching_suite(limits: SuiteLimits) -> list[CheckResult]:
    s = "branching"
    out: list[CheckResult] = []
    for n in _ns(limits):
        m = so_rank(n)
        for lm in partitions_up_to(limits.max_size, n):
            result = branch(n, lm)
            elements = enumerate_ssyt(n, lm)
            out.append(check(s, f"fibers_exhaust_n{n}_{lm}", result.all_fibers_exhaust, True))
            total = sum(
                count * len(enumerate_sst_ai(n, rho))
                for rho, count in result.multiplicities.items()
            )
            out.append(check(s, f"dimension_n{n}_{lm}", total, len(elements)))
            expected = LaurentPolynomial.total(
                ai_variables(m),
                [ch_ai(enumerate_sst_ai(n, rho), m) * count
                 for rho, count in result.multiplicities.items()],
            )
            out.append(check(s, f"character_n{n}_{lm}", ch_ai(elements, m), expected))
            superstandard = t_lambda(lm)
            bad = [str(f.ot.sort_key) for f in result.fibers if gl_q_of_ot(f.ot) != superstandard]
            out.append(no_violations(s, f"q_of_fibers_n{n}_{lm}", bad))
            bad = [t.label for t in elements if rs(column_reading(t))[1] != superstandard]
            out.append(no_violations(s, f"q_of_column_words_n{n}_{lm}", bad))
            bad = [t.label for t in elements if p_symbol(column_reading(t)) != t]
            out.append(no_violations(s, f"p_of_column_words_n{n}_{lm}", bad))
    return out


SUITES: dict[str, Suite] = {
    "examples": examples_suite,
    "axioms": axioms_suite,
    "counts": counts_suite,
    "kmatrix": kmatrix_suite,
    "theorem": theorem_suite,
    "lowrank": lowrank_suite,
    "rsai": rsai_suite,
    "decomposition": decomposition_suite,
    "branching": branching_suite,
}

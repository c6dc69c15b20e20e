"""AI-crystal structure, characters, singular elements and low-rank tables."""

from __future__ import annotations

import pytest

from aicrystal.ai_crystal import (
    AITensor,
    ai_axiom_violations,
    ai_component,
    ai_contribution,
    ai_generators,
    ai_graph,
    ai_variables,
    btil,
    ch_ai,
    deg,
    expected_singular_set,
    is_singular,
    morphism_violations,
    odd_degrees,
    rank3_element,
    rank3_row_table,
    rank3_top,
    rank4_row_table,
    rank4_two_row_table,
    singular_elements,
    so_dimension,
    so_highest_weights,
    t_rho,
    weight_multiplicities,
)
from aicrystal.errors import NonIntegralCharacterError, RankError, ShapeError
from aicrystal.gl_crystal import components
from aicrystal.kmatrix import enumerate_sst_ai, k1
from aicrystal.laurent import LaurentPolynomial
from aicrystal.models import Partition, SoWeight, Tableau, so_rank, word_of
from aicrystal.tableaux import enumerate_ssyt, partitions_up_to
from tests.oracles import weyl_character


def T(n: int, *rows):
    return Tableau.from_rows(n, rows)


class TestInducedStructure:
    def test_single_letter(self):
        assert deg(word_of(3, (1,)), 1) == 1
        assert btil(word_of(3, (1,)), 1) == word_of(3, (2,))

    def test_even_phi_raises(self):
        assert deg(word_of(3, (1, 1)), 1) == 0
        assert btil(word_of(3, (1, 1)), 1) is None

    def test_odd_phi_lowers(self):
        assert btil(word_of(3, (2, 1, 2)), 1) == word_of(3, (2, 1, 1))

    def test_tableau_actions(self):
        t = T(3, (1, 1), (2,))
        assert btil(t, 1) == T(3, (1, 2), (2,))
        assert btil(t, 2) == T(3, (1, 1), (3,))

    @pytest.mark.parametrize("n", [3, 4])
    def test_axioms_on_sst(self, n):
        for lm in partitions_up_to(3, n):
            assert ai_axiom_violations(enumerate_ssyt(n, lm), n) == []

    def test_identity_is_a_morphism(self):
        elements = enumerate_ssyt(3, Partition.of(2, 1))
        assert morphism_violations(lambda b: b, elements, 3) == []


class TestAIGraph:
    def test_sst3_21(self):
        elements = enumerate_ssyt(3, Partition.of(2, 1))
        graph = ai_graph(elements, 3)
        assert len(graph.nodes) == 8
        assert len(graph.edges) == 6
        assert not graph.directed
        assert graph.to_dot().startswith("graph crystal {")
        assert graph.to_dot().count("--") == 6

    def test_sst3_21_components(self):
        elements = enumerate_ssyt(3, Partition.of(2, 1))
        comps = components(elements, ai_generators(3))
        assert sorted(len(c) for c in comps) == [3, 5]
        small = min(comps, key=len)
        assert {t.label for t in small} == {"11/2", "12/2", "11/3"}

    def test_component_of_single_box(self):
        assert len(ai_component(T(4, (1,)))) == 4


class TestAITensor:
    def test_agrees_with_words_at_n3(self):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                pair = AITensor(T(3, (a,)), T(3, (b,)))
                word = word_of(3, (a, b))
                for i in (1, 2):
                    assert deg(pair, i) == deg(word, i)
                    image = btil(pair, i)
                    expected = btil(word, i)
                    got = None if image is None else word_of(
                        3, image.left.row_word + image.right.row_word
                    )
                    assert got == expected

    def test_str(self):
        assert str(AITensor(T(3, (1,)), T(3, (2,)))) == "1⊗2"


class TestCharacters:
    def test_sst3_1(self):
        assert ch_ai(enumerate_ssyt(3, Partition.of(1)), 1).to_text() == "y1 + 1 + y1^-1"

    def test_sst4_1(self):
        text = ch_ai(enumerate_ssyt(4, Partition.of(1)), 2).to_text()
        assert text == "y1 + y1^-1 + y3 + y3^-1"

    def test_variables(self):
        assert ai_variables(3) == ("y1", "y3", "y5")

    def test_single_element_is_fractional(self):
        poly = ch_ai([T(3, (1,))], 1)
        assert not poly.is_integral()
        with pytest.raises(NonIntegralCharacterError):
            ch_ai([T(3, (1,))], 1, assert_integral=True)

    def test_product_form_matches_sum(self):
        elements = enumerate_sst_ai(4, Partition.of(2, 1))
        total = LaurentPolynomial.total(ai_variables(2), [ai_contribution(b, 2) for b in elements])
        assert total == ch_ai(elements, 2)

    def test_weight_multiplicities(self):
        assert weight_multiplicities(enumerate_ssyt(3, Partition.of(1)), 1) == {
            (1,): 1,
            (0,): 1,
            (-1,): 1,
        }

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_weyl_character(self, n):
        m = so_rank(n)
        for rho in partitions_up_to(4, m):
            expected: dict[tuple[int, ...], int] = {}
            for nu in so_highest_weights(n, rho):
                for exps, c in weyl_character(n, nu.coordinates).items():
                    expected[exps] = expected.get(exps, 0) + c
            got = ch_ai(enumerate_sst_ai(n, rho), m).integer_terms()
            assert got == expected, f"n={n} rho={rho}"


class TestSingular:
    @pytest.mark.parametrize(
        "n,parts,rows",
        [
            (4, (1, 1), ((2,), (3,))),
            (4, (2, 1), ((1, 2), (3,))),
            (3, (2,), ((2, 2),)),
            (3, (), ()),
        ],
    )
    def test_t_rho(self, n, parts, rows):
        assert t_rho(n, Partition(parts=parts)).rows == rows

    def test_k1_twin_at_half_rank(self):
        top = t_rho(4, Partition.of(1, 1))
        assert k1(top) == T(4, (1,), (4,))
        assert expected_singular_set(4, Partition.of(1, 1), Partition.of(1, 1)) == (top, k1(top))

    def test_other_degree_has_no_singular_elements(self):
        assert expected_singular_set(4, Partition.of(1, 1), Partition.of(2)) == ()

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_t_rho_is_the_singular_element(self, n):
        m = so_rank(n)
        for rho in partitions_up_to(3, m):
            members = enumerate_sst_ai(n, rho)
            found = singular_elements(members, rho)
            assert set(found) == set(expected_singular_set(n, rho, rho))
            assert set(ai_component(t_rho(n, rho))) == set(members)

    def test_degrees_of_t_rho(self):
        assert odd_degrees(t_rho(5, Partition.of(2, 1)), 2) == (2, 1)

    def test_shape_too_long(self):
        with pytest.raises(ShapeError):
            is_singular(T(3, (1,), (2,)), Partition.of(1, 1))

    def test_rank_needs_n_at_least_3(self):
        with pytest.raises(RankError):
            so_rank(2)


class TestWeights:
    def test_highest_weights_split_at_half_rank(self):
        weights = so_highest_weights(4, Partition.of(1, 1))
        assert [w.coordinates for w in weights] == [(1, 1), (1, -1)]
        assert all(w.is_dominant() for w in weights)

    @pytest.mark.parametrize(
        "n,nu,dim",
        [
            (3, (0,), 1),
            (3, (2,), 5),
            (4, (1, 0), 4),
            (4, (2, 0), 9),
            (4, (1, 1), 3),
            (4, (1, -1), 3),
            (5, (1, 0), 5),
            (5, (1, 1), 10),
            (6, (1, 0, 0), 6),
        ],
    )
    def test_so_dimension(self, n, nu, dim):
        assert so_dimension(SoWeight(n=n, coordinates=nu)) == dim

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            SoWeight(n=5, coordinates=(1,))


class TestLowRankTables:
    @pytest.mark.parametrize("l", range(5))
    def test_rank3_rows(self, l):
        table = rank3_row_table(l)
        assert table.mismatches() == []
        assert set(table.elements) == set(enumerate_sst_ai(3, table.shape))

    @pytest.mark.parametrize("l", range(5))
    def test_rank4_rows(self, l):
        table = rank4_row_table(l)
        assert table.mismatches() == []
        assert set(table.elements) == set(enumerate_sst_ai(4, table.shape))

    @pytest.mark.parametrize("l1,l2", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 3)])
    def test_rank4_two_rows(self, l1, l2):
        table = rank4_two_row_table(l1, l2)
        assert table.mismatches() == []
        assert set(table.elements) == set(enumerate_sst_ai(4, table.shape))

    def test_two_row_needs_second_row(self):
        with pytest.raises(ValueError, match="l1 >= l2 > 0"):
            rank4_two_row_table(2, 0)

    def test_rank3_parameters(self):
        assert rank3_element(3, 1, 1).rows == ((1, 2, 3),)
        assert rank3_top(2).rows == ((3, 3),)

"""gl_n crystal operators on words, tableaux and tensor pairs."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given

from aicrystal.errors import CrystalIndexError
from aicrystal.gl_crystal import (
    GlTensor,
    ch_gl,
    components,
    eps,
    etil,
    flatten,
    ftil,
    gl_generators,
    gl_graph,
    phi,
    signature,
    stembridge_violations,
    tensor_of_letters,
    wt,
)
from aicrystal.models import Partition, Tableau, word_of
from aicrystal.tableaux import enumerate_ssyt, partitions_up_to, rs
from tests.oracles import schur_polynomial
from tests.strategies import words


def w(n: int, *letters: int):
    return word_of(n, letters)


class TestSignatureRule:
    def test_raise_absent_on_21(self):
        assert etil(w(2, 2, 1), 1) is None

    def test_raise_12(self):
        assert etil(w(2, 1, 2), 1) == w(2, 1, 1)

    def test_lower_11(self):
        assert ftil(w(2, 1, 1), 1) == w(2, 1, 2)

    def test_string_lengths_212(self):
        assert (eps(w(3, 2, 1, 2), 1), phi(w(3, 2, 1, 2), 1)) == (1, 0)

    def test_signature_positions(self):
        minus, plus = signature((1, 2, 2, 1), 1)
        assert minus == [1]
        assert plus == [0]

    def test_index_out_of_range(self):
        with pytest.raises(CrystalIndexError):
            ftil(w(3, 1), 3)

    def test_weight(self):
        assert wt(w(4, 4, 2, 2)).coordinates == (0, 2, 0, 1)


class TestTensorRule:
    @pytest.mark.parametrize("letters", list(product(range(1, 4), repeat=3)))
    def test_words_agree_with_nested_pairs(self, letters):
        word = w(3, *letters)
        pair = tensor_of_letters(word)
        for i in (1, 2):
            assert (eps(word, i), phi(word, i)) == (eps(pair, i), phi(pair, i))
            for op in (etil, ftil):
                image = op(pair, i)
                expected = op(word, i)
                assert (None if image is None else flatten(image)) == expected

    def test_associativity(self):
        a, b, c = w(3, 2), w(3, 1), w(3, 2)
        left = GlTensor(GlTensor(a, b), c)
        right = GlTensor(a, GlTensor(b, c))
        for i in (1, 2):
            assert eps(left, i) == eps(right, i)
            assert flatten(ftil(left, i) or left) == flatten(ftil(right, i) or right)

    def test_pair_weight(self):
        assert wt(GlTensor(w(3, 1), w(3, 3))).coordinates == (1, 0, 1)


class TestTableauCrystal:
    @pytest.mark.parametrize("n", [3, 4])
    def test_stembridge_axioms(self, n):
        for lm in partitions_up_to(3, n):
            assert stembridge_violations(enumerate_ssyt(n, lm), n) == []

    def test_graph_of_sst3_21(self):
        graph = gl_graph(enumerate_ssyt(3, Partition.of(2, 1)), 3)
        assert len(graph.nodes) == 8
        assert len(graph.edges) == 8
        assert graph.directed
        assert graph.to_dot().count("->") == 8

    def test_empty_shape_graph(self):
        graph = gl_graph(enumerate_ssyt(3, Partition()), 3)
        assert graph.nodes == ["∅"]
        assert graph.edges == []

    def test_sst_is_one_component(self):
        elements = enumerate_ssyt(3, Partition.of(2, 1))
        assert len(components(elements, gl_generators(3))) == 1

    def test_highest_weight_element(self):
        t = Tableau.from_rows(3, [[1, 1], [2]])
        assert all(etil(t, i) is None for i in (1, 2))

    @given(words(max_len=5))
    def test_operators_commute_with_p_symbol(self, word):
        p = rs(word)[0]
        for i in range(1, word.n):
            image = ftil(word, i)
            assert ftil(p, i) == (None if image is None else rs(image)[0])

    def test_word_components_match_standard_tableaux(self):
        all_words = [w(3, *x) for x in product(range(1, 4), repeat=3)]
        comps = components(all_words, gl_generators(3))
        # one component per standard tableau of size 3: (3), (2,1) twice, (1,1,1)
        assert len(comps) == 4
        assert sorted(len(c) for c in comps) == [1, 8, 8, 10]


class TestCharacters:
    @pytest.mark.parametrize(
        "n,parts",
        [(2, (1,)), (3, (1,)), (3, (2, 1)), (3, (2, 2)), (4, (2, 1)), (4, (1, 1, 1))],
    )
    def test_matches_bialternant(self, n, parts):
        character = ch_gl(enumerate_ssyt(n, Partition(parts=parts)), n)
        assert character.integer_terms() == schur_polynomial(n, parts)

    def test_empty_shape_is_one(self):
        assert ch_gl(enumerate_ssyt(3, Partition()), 3).to_text() == "1"

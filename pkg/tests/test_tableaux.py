"""Partitions, tableaux, insertion and the RS correspondence."""

from __future__ import annotations

from itertools import combinations, product

import pytest
from hypothesis import given
from pydantic import ValidationError

from aicrystal.errors import ColumnError, CornerError, LetterError, NotSemistandardError
from aicrystal.models import Partition, Tableau, Word, word_of
from aicrystal.tableaux import (
    column_pair_conditions,
    column_reading,
    covers,
    enumerate_ssyt,
    enumerate_standard,
    juxtapose,
    p_symbol,
    p_symbol_tensor,
    partitions_of,
    reverse_insert,
    row_insert,
    rs,
)
from tests.strategies import semistandard_tableaux, words


class TestPartition:
    def test_parse_plain(self):
        assert Partition.parse("2,1").parts == (2, 1)

    def test_parse_empty_spellings(self):
        assert Partition.parse("0") == Partition()
        assert Partition.parse("") == Partition()
        assert Partition.parse("2,0,0").parts == (2,)

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValidationError, match="weakly decrease"):
            Partition.of(1, 2)

    def test_rejects_non_positive_parts(self):
        with pytest.raises(ValidationError):
            Partition.of(2, 0)

    def test_str(self):
        assert str(Partition()) == "∅"
        assert str(Partition.of(3, 1)) == "(3,1)"

    def test_covers(self):
        assert covers(Partition.of(2), Partition.of(2, 1))
        assert covers(Partition(), Partition.of(1))
        assert not covers(Partition.of(2), Partition.of(2, 2))
        assert not covers(Partition.of(2, 1), Partition.of(2))

    def test_column_lengths(self):
        assert Partition.of(3, 1).column_lengths == (2, 1, 1)

    def test_partitions_of_counts(self):
        assert [len(partitions_of(k)) for k in range(7)] == [1, 1, 2, 3, 5, 7, 11]
        assert partitions_of(4, 2) == (Partition.of(2, 2), Partition.of(3, 1), Partition.of(4))

    def test_json_shape(self):
        assert Partition.of(2, 1).model_dump() == [2, 1]


class TestTableauModel:
    def test_json_round_trip(self, reading_tableau):
        payload = reading_tableau.model_dump()
        assert payload == {"n": 4, "shape": [4, 2, 1], "rows": [[1, 2, 3, 3], [2, 3], [4]]}
        assert Tableau.model_validate(payload) == reading_tableau

    def test_shape_must_match_rows(self):
        with pytest.raises(ValidationError, match="does not match"):
            Tableau.model_validate({"n": 3, "shape": [2], "rows": [[1]]})

    def test_entry_outside_alphabet(self):
        with pytest.raises(ValidationError, match="outside"):
            Tableau.from_rows(2, [[1, 3]])

    def test_semistandard_predicate(self):
        assert Tableau.from_rows(3, [[1, 1], [2]]).is_semistandard()
        assert not Tableau.from_rows(3, [[1, 1], [1]]).is_semistandard()
        assert not Tableau.from_rows(3, [[2, 1]]).is_semistandard()

    def test_word_letters_checked(self):
        with pytest.raises(ValidationError):
            Word(n=3, letters=(1, 4))

    def test_word_parse(self):
        assert Word.parse("4,2,3").letters == (4, 2, 3)
        assert Word.parse("4,2,3").n == 4
        assert Word.parse("", 3).letters == ()


class TestInsertion:
    def test_column_reading(self, reading_tableau):
        assert column_reading(reading_tableau).letters == (4, 2, 1, 3, 2, 3, 3)

    @pytest.mark.parametrize(
        "letter,expected",
        [(1, "1133/22/3/4"), (2, "1223/233/4"), (3, "12333/23/4")],
    )
    def test_row_insert(self, reading_tableau, letter, expected):
        assert row_insert(reading_tableau, letter).label == expected

    def test_row_insert_rejects_letter(self, reading_tableau):
        with pytest.raises(LetterError):
            row_insert(reading_tableau, 5)

    def test_row_insert_rejects_non_semistandard(self):
        with pytest.raises(NotSemistandardError):
            row_insert(Tableau.from_rows(3, [[2, 1]]), 1)

    def test_reverse_insert_rejects_inner_cell(self, reading_tableau):
        with pytest.raises(CornerError):
            reverse_insert(reading_tableau, (1, 2))

    def test_rs_example(self, rs_word):
        p, q = rs(rs_word)
        assert p.label == "123/23/4"
        assert q.label == "135/26/4"

    def test_rs_empty_word(self):
        p, q = rs(word_of(3, ()))
        assert p.rows == () and q.rows == ()

    def test_p_symbol_tensor(self):
        t = Tableau.from_rows(4, [[1, 3], [3]])
        s = Tableau.from_rows(4, [[1, 2], [2, 3], [4]])
        assert p_symbol_tensor(t, s).label == "112/233/34"

    def test_rs_is_bijective_on_small_words(self):
        pairs = {rs(word_of(3, letters)) for letters in product(range(1, 4), repeat=4)}
        assert len(pairs) == 3**4
        assert all(q.is_standard() and p.shape == q.shape for p, q in pairs)

    @given(semistandard_tableaux(), words(max_len=1))
    def test_reverse_insert_undoes_row_insert(self, t, w):
        letter = min(w.letters[0] if w.letters else 1, t.n)
        grown = row_insert(t, letter)
        new_cell = next(
            (r, len(row))
            for r, row in enumerate(grown.rows, 1)
            if r > len(t.rows) or len(row) > len(t.rows[r - 1])
        )
        assert reverse_insert(grown, new_cell) == (t, letter)

    @given(semistandard_tableaux())
    def test_p_of_column_reading_is_identity(self, t):
        assert p_symbol(column_reading(t)) == t


class TestEnumeration:
    def test_sst3_21(self, shape_21):
        assert len(enumerate_ssyt(3, shape_21)) == 8

    def test_too_many_rows_is_empty(self):
        assert enumerate_ssyt(2, Partition.of(1, 1, 1)) == ()

    def test_empty_shape(self):
        assert [t.rows for t in enumerate_ssyt(3, Partition())] == [()]

    def test_canonical_order_is_row_reading(self):
        listing = enumerate_ssyt(3, Partition.of(2))
        assert [t.label for t in listing] == ["11", "12", "13", "22", "23", "33"]

    def test_standard_tableaux(self):
        assert [t.label for t in enumerate_standard(Partition.of(2, 1))] == ["12/3", "13/2"]


class TestColumnPairs:
    def test_juxtapose(self):
        assert juxtapose((1, 3), (2,)) == ((1, 2), (3,))

    def test_dominated_pair_juxtaposes(self):
        cond = column_pair_conditions((1, 3), (2, 4), 4)
        assert cond.length_is_k and cond.entrywise and cond.juxtaposed
        assert cond.equivalent

    def test_taller_second_column(self):
        cond = column_pair_conditions((2,), (1, 3), 3)
        assert cond.product_length > 1
        assert not cond.juxtaposed
        assert cond.equivalent

    def test_taller_second_column_never_juxtaposes(self):
        cond = column_pair_conditions((1,), (1, 2), 3)
        assert (cond.length_is_k, cond.entrywise, cond.juxtaposed) == (False, False, False)
        assert cond.equivalent

    def test_juxtapose_needs_weakly_shorter_second_column(self):
        with pytest.raises(ColumnError, match="taller"):
            juxtapose((1,), (1, 2))

    @pytest.mark.parametrize("n", [3, 4])
    def test_conditions_agree_on_every_pair(self, n):
        columns = [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
        for c1 in columns:
            if not c1:
                continue
            for c2 in columns:
                assert column_pair_conditions(c1, c2, n).equivalent, (c1, c2)

    def test_empty_first_column(self):
        with pytest.raises(ColumnError):
            column_pair_conditions((), (1,), 3)

    def test_bad_column(self):
        with pytest.raises(ColumnError):
            column_pair_conditions((2, 1), (1,), 3)

from __future__ import annotations

import itertools

import pytest

from sbgrowth.errors import InvalidStrandCountError, InvalidWordError
from sbgrowth.oracle import class_of
from sbgrowth.words import (
    MonoidKind,
    SimpleElement,
    Word,
    build_presentation,
    flip,
    flip_simple,
    gen_left_extends_simple,
    gen_right_divides,
    inversions,
    rewrite_neighbors,
    right_divides_word,
    sigma,
    simple_to_word,
    transport_singular,
)


def _w(text: str, n: int = 3) -> Word:
    return Word.parse(text, n)


def _simple(text: str, n: int = 3) -> SimpleElement:
    return SimpleElement.from_word(_w(text, n))


class TestPresentation:
    @pytest.mark.parametrize("n, expected", [(2, 1), (3, 5), (4, 13)])
    def test_singular_relation_counts(self, n, expected):
        assert len(build_presentation(n).relations) == expected

    @pytest.mark.parametrize("n, expected", [(2, 0), (3, 1), (4, 3)])
    def test_classical_relation_counts(self, n, expected):
        assert len(build_presentation(n, MonoidKind.CLASSICAL).relations) == expected

    def test_three_strand_relations(self):
        rels = {frozenset((str(a), str(b))) for a, b in build_presentation(3).relations}
        assert rels == {
            frozenset(("s1s2s1", "s2s1s2")),
            frozenset(("x1s1", "s1x1")),
            frozenset(("x2s2", "s2x2")),
            frozenset(("s1s2x1", "x2s1s2")),
            frozenset(("s2s1x2", "x1s2s1")),
        }

    @pytest.mark.parametrize("kind", list(MonoidKind))
    @pytest.mark.parametrize("n", range(2, 7))
    def test_relations_balanced_and_closed_under_flip(self, n, kind):
        relations = build_presentation(n, kind).relations
        as_pairs = {frozenset(rel) for rel in relations}
        for lhs, rhs in relations:
            assert len(lhs) == len(rhs)
            assert frozenset((flip(lhs), flip(rhs))) in as_pairs

    def test_invalid_strand_count(self):
        with pytest.raises(InvalidStrandCountError):
            build_presentation(1)

    def test_generators_order(self):
        assert [str(g) for g in build_presentation(3).generators] == ["s1", "s2", "x1", "x2"]


class TestWords:
    def test_parse_forms(self):
        assert _w("s1 s2 x1") == _w("s1s2x1") == _w("σ1σ2x1")
        assert len(_w("1")) == 0
        assert str(_w("")) == "1"

    def test_parse_rejects_out_of_range_generator(self):
        with pytest.raises(InvalidWordError):
            _w("s3")

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidWordError):
            _w("s1 y2")

    def test_codes_follow_generator_order(self):
        assert _w("s1s2x1x2").codes() == (0, 1, 2, 3)
        assert Word.from_codes((3, 0), 3) == _w("x2s1")

    def test_flip(self):
        assert flip(_w("s1x2")) == _w("s2x1")
        w = _w("s1s2x1s1", 4)
        assert flip(flip(w)) == w
        assert flip(w) == _w("s3s2x3s3", 4)


class TestRewriting:
    def test_braid_neighbor(self):
        assert rewrite_neighbors(_w("s1s2s1"), build_presentation(3)) == {_w("s2s1s2")}

    def test_commutation_neighbor(self):
        assert rewrite_neighbors(_w("x1s1"), build_presentation(3)) == {_w("s1x1")}

    def test_multiple_positions(self):
        neighbors = rewrite_neighbors(_w("x1s1x1"), build_presentation(3))
        assert neighbors == {_w("s1x1x1"), _w("x1x1s1")}

    def test_no_neighbors(self):
        assert rewrite_neighbors(_w("s1s2"), build_presentation(3)) == frozenset()

    @pytest.mark.parametrize("n", [3, 4])
    def test_neighbors_are_symmetric(self, n):
        presentation = build_presentation(n)
        for codes in itertools.product(range(presentation.alphabet_size), repeat=3):
            word = Word.from_codes(codes, n)
            for other in rewrite_neighbors(word, presentation):
                assert word in rewrite_neighbors(other, presentation)

    def test_classical_ignores_singular_relations(self):
        p = build_presentation(3, MonoidKind.CLASSICAL)
        assert rewrite_neighbors(_w("s1s1"), p) == frozenset()


class TestSimples:
    def test_delta_word(self):
        delta = SimpleElement.delta(3)
        assert str(simple_to_word(delta)) == "s1s2s1"
        assert delta.inv_count == 3
        assert inversions(delta.perm) == 3

    def test_identity(self):
        e = SimpleElement.identity(4)
        assert e.is_identity
        assert len(simple_to_word(e)) == 0

    def test_from_word_rejects_non_reduced(self):
        with pytest.raises(InvalidWordError):
            _simple("s1s1")

    def test_from_word_rejects_singular_letters(self):
        with pytest.raises(InvalidWordError):
            _simple("s1x1")

    def test_shortlex_words_n4(self):
        for perm in itertools.permutations(range(1, 5)):
            s = SimpleElement(perm)
            word = simple_to_word(s)
            assert len(word) == s.inv_count
            assert SimpleElement.from_word(word) == s

    def test_shortlex_is_smallest(self):
        assert str(simple_to_word(_simple("s2s1s2"))) == "s1s2s1"
        assert str(simple_to_word(_simple("s3s1", 4))) == "s1s3"

    def test_right_divides(self):
        assert gen_right_divides(1, SimpleElement.delta(3))
        assert gen_right_divides(2, _simple("s1s2"))
        assert not gen_right_divides(1, _simple("s2"))
        assert not gen_right_divides(1, _simple("s1s2"))

    def test_left_extends(self):
        assert gen_left_extends_simple(1, SimpleElement.identity(3))
        assert not gen_left_extends_simple(1, _simple("s1"))
        assert gen_left_extends_simple(2, _simple("s1"))
        assert not any(gen_left_extends_simple(k, SimpleElement.delta(3)) for k in (1, 2))

    def test_right_divides_word(self):
        assert right_divides_word((1, 2), _simple("s1s2"))
        assert not right_divides_word((2, 1), _simple("s1s2"))
        assert right_divides_word((2, 1), SimpleElement.delta(3))

    def test_flip_simple(self):
        assert flip_simple(_simple("s1")) == _simple("s2")
        assert flip_simple(_simple("s1s2")) == _simple("s2s1")
        assert flip_simple(SimpleElement.delta(4)) == SimpleElement.delta(4)

    def test_transport(self):
        # x1 s2 s1 = s2 s1 x2 and x1 Delta = Delta x2
        assert transport_singular(1, _simple("s2s1")) == 2
        assert transport_singular(1, SimpleElement.delta(3)) == 2
        assert transport_singular(1, _simple("s1")) == 1
        assert transport_singular(1, _simple("s2")) is None
        assert transport_singular(3, _simple("s1", 4)) == 3

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_divisor_predicates_match_word_level(self, n):
        classical = build_presentation(n, MonoidKind.CLASSICAL)
        for perm in itertools.permutations(range(1, n + 1)):
            s = SimpleElement(perm)
            word = simple_to_word(s)
            last_letters = {w.letters[-1].index for w in class_of(word, classical) if len(w)}
            for k in range(1, n):
                assert gen_right_divides(k, s) == (k in last_letters)
                # s_k s is simple iff no spelling of it repeats a letter back to back
                spellings = class_of(Word(n, (sigma(k),) + word.letters), classical)
                square_free = all(
                    a != b for w in spellings for a, b in zip(w.letters, w.letters[1:])
                )
                assert gen_left_extends_simple(k, s) == square_free

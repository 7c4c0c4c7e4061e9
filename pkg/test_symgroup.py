import pytest
from hypothesis import given, settings, strategies as st

from frobnil.algebra.symgroup import (
    Permutation, all_permutations, all_reduced_words, compose, from_word, identity,
    inverse, left_mul, length, longest, reduced_word, right_mul, simple,
)
from frobnil.exceptions import IndexOutOfRange, SizeMismatch, SizeTooLarge


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(lambda images: Permutation(tuple(images)))


class TestPermutations:
    """Composition, inverses and lengths in one-line notation."""

    def test_simple_transposition(self):
        """s_2 in S_3 swaps 2 and 3."""
        assert simple(3, 2).images == (1, 3, 2)

    def test_simple_out_of_range(self):
        """s_3 does not exist in S_3."""
        with pytest.raises(IndexOutOfRange):
            simple(3, 3)

    def test_compose_sizes_must_match(self):
        """Permutations of different sizes do not compose."""
        with pytest.raises(SizeMismatch):
            compose(identity(2), identity(3))

    def test_right_and_left_multiplication(self):
        """w s_i swaps positions, s_i w swaps values."""
        w = Permutation((2, 3, 1))
        assert right_mul(w, 1) == compose(w, simple(3, 1))
        assert left_mul(1, w) == compose(simple(3, 1), w)

    def test_longest_element(self):
        """The longest element of S_4 has length 6."""
        assert length(longest(4)) == 6

    @settings(max_examples=40)
    @given(permutations_of(4))
    def test_inverse(self, w):
        """w w^-1 is the identity and inversion keeps the length."""
        assert compose(w, inverse(w)) == identity(4)
        assert length(inverse(w)) == length(w)


class TestReducedWords:
    """Canonical and exhaustive reduced words."""

    def test_reduced_words_of_longest_in_s3(self):
        """w0 in S_3 has exactly the words 121 and 212."""
        assert all_reduced_words(longest(3)) == {(1, 2, 1), (2, 1, 2)}
        assert reduced_word(longest(3)) == [1, 2, 1]

    def test_identity_has_empty_word(self):
        """The identity is the empty product."""
        assert reduced_word(identity(3)) == []

    def test_number_of_reduced_words_of_w0_in_s4(self):
        """w0 in S_4 has 16 reduced words."""
        assert len(all_reduced_words(longest(4))) == 16

    def test_enumeration_refused_for_large_n(self):
        """Reduced-word enumeration is bounded."""
        with pytest.raises(SizeTooLarge):
            all_reduced_words(identity(6))

    def test_every_reduced_word_evaluates_to_w(self):
        """All reduced words of every w in S_4 evaluate to w and have length l(w)."""
        for w in all_permutations(4):
            for word in all_reduced_words(w):
                assert from_word(4, word) == w
                assert len(word) == length(w)

    @settings(max_examples=60)
    @given(permutations_of(5))
    def test_canonical_word_is_lexicographically_smallest(self, w):
        """reduced_word returns the smallest reduced word."""
        assert tuple(reduced_word(w)) == min(all_reduced_words(w))

    @settings(max_examples=60)
    @given(permutations_of(5), permutations_of(5))
    def test_length_is_subadditive(self, w, v):
        """l(wv) <= l(w) + l(v)."""
        assert length(compose(w, v)) <= length(w) + length(v)

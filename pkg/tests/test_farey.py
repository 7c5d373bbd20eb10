"""Rational indexing: Stern-Brocot descent, Christoffel words, primitive
word scheme, associates, enumeration, CSV export."""

import io
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from palcore.errors import InvalidRational
from palcore.farey import (
    are_associates,
    christoffel,
    enumerate_farey,
    farey_parents,
    farey_to_csv,
    primitive_word,
    slope_depth,
    validate_slope,
)
from palcore.words import abelianize, cyclically_equal, is_palindrome, is_primitive, parse


def coprime_slopes(limit):
    for q in range(limit + 1):
        for p in range(limit + 1):
            if p + q == 0 or p + q > limit:
                continue
            if math.gcd(p, q) == 1:
                yield p, q


class TestValidation:
    def test_accepts_reduced_nonnegative(self):
        for s in ((0, 1), (1, 0), (3, 5), (7, 2)):
            validate_slope(*s)

    def test_rejects_common_factor(self):
        with pytest.raises(InvalidRational):
            validate_slope(2, 4)

    def test_rejects_negatives_and_zero_zero(self):
        for s in ((-1, 2), (1, -2), (0, 0)):
            with pytest.raises(InvalidRational):
                validate_slope(*s)

    def test_rejects_non_integers(self):
        with pytest.raises(InvalidRational):
            validate_slope(1.5, 2)


class TestParents:
    def test_known_parents(self):
        assert farey_parents(3, 5) == ((1, 2), (2, 3))
        assert farey_parents(1, 3) == ((0, 1), (1, 2))
        assert farey_parents(1, 1) == ((0, 1), (1, 0))

    def test_roots_have_no_parents(self):
        for s in ((0, 1), (1, 0)):
            with pytest.raises(InvalidRational):
                farey_parents(*s)

    def test_mediant_and_unimodularity(self):
        for p, q in coprime_slopes(24):
            if (p, q) in ((0, 1), (1, 0)):
                continue
            (r, s), (t, u) = farey_parents(p, q)
            assert (r + t, s + u) == (p, q)
            assert abs(r * u - t * s) == 1

    def test_depths(self):
        assert slope_depth(0, 1) == 0
        assert slope_depth(1, 0) == 0
        assert slope_depth(1, 1) == 1
        assert slope_depth(3, 5) == 4
        assert slope_depth(1, 6) == 6


class TestChristoffel:
    def test_roots_and_mediant(self):
        assert christoffel(0, 1) == parse("a")
        assert christoffel(1, 0) == parse("b")
        assert christoffel(1, 1) == parse("ab")

    def test_known_words(self):
        assert str(christoffel(2, 3)) == "aabab"
        assert str(christoffel(1, 3)) == "aaab"
        assert str(christoffel(3, 1)) == "abbb"

    def test_letter_counts_match_slope(self):
        for p, q in coprime_slopes(15):
            ea, eb = abelianize(christoffel(p, q))
            assert (ea, eb) == (q, p)


class TestPrimitiveWord:
    def test_roots(self):
        assert str(primitive_word(0, 1).word) == "a"
        assert str(primitive_word(1, 0).word) == "b"

    def test_even_case_is_palindromic_rotation(self):
        node = primitive_word(2, 5)
        assert str(node.word) == "abaaaba"
        assert node.factorization is None
        assert is_palindrome(node.word)
        assert cyclically_equal(node.word, christoffel(2, 5))

    def test_odd_case_factors(self):
        node = primitive_word(3, 5)
        assert str(node.word) == "abaababa"
        u, v = node.factorization
        assert (str(u), str(v)) == ("aba", "ababa")
        assert is_palindrome(u) and is_palindrome(v)
        assert u * v == node.word

    def test_one_one_splits_into_letters(self):
        node = primitive_word(1, 1)
        assert node.factorization is not None
        u, v = node.factorization
        assert u * v == node.word

    def test_palindromic_rotation_is_unique(self):
        # pq even: exactly one rotation of the Christoffel word reads the
        # same both ways
        for p, q in ((2, 5), (4, 9), (1, 6), (8, 3)):
            w = christoffel(p, q).letters
            rotations = {w[i:] + w[:i] for i in range(len(w))}
            count = sum(1 for r in rotations if r == tuple(reversed(r)))
            assert count == 1

    def test_node_metadata(self):
        node = primitive_word(3, 5)
        assert (node.p, node.q, node.depth) == (3, 5, 4)
        assert node.parents == ((1, 2), (2, 3))

    def test_all_words_are_primitive(self):
        for p, q in coprime_slopes(10):
            assert is_primitive(primitive_word(p, q).word)

    def test_rejects_unreduced(self):
        with pytest.raises(InvalidRational):
            primitive_word(2, 4)


class TestAssociates:
    def test_parents_are_associates(self):
        for p, q in coprime_slopes(16):
            if (p, q) in ((0, 1), (1, 0)):
                continue
            (r, s), (t, u) = farey_parents(p, q)
            assert are_associates((r, s), (t, u))
            assert are_associates((p, q), (r, s))
            assert are_associates((p, q), (t, u))

    def test_distant_slopes_are_not(self):
        assert not are_associates((1, 3), (3, 5))
        assert not are_associates((0, 1), (2, 1))

    def test_symmetric(self):
        assert are_associates((1, 2), (1, 3)) == are_associates((1, 3), (1, 2))


class TestEnumeration:
    def test_counts(self):
        for depth in range(7):
            assert len(enumerate_farey(depth)) == 2**depth + 1

    def test_sorted_by_q_then_p(self):
        nodes = enumerate_farey(4)
        keys = [(n.q, n.p) for n in nodes]
        assert keys == sorted(keys)

    def test_membership(self):
        slopes = {(n.p, n.q) for n in enumerate_farey(4)}
        assert (3, 5) in slopes and (5, 3) in slopes
        assert (1, 5) not in slopes  # depth 5

    def test_negative_depth_rejected(self):
        with pytest.raises(ValueError):
            enumerate_farey(-1)


class TestCsv:
    def test_depth_one_golden(self):
        buf = io.StringIO()
        farey_to_csv(enumerate_farey(1), buf)
        assert buf.getvalue().splitlines() == [
            "p,q,word,is_palindrome,factor1,factor2",
            "1,0,b,true,,",
            "0,1,a,true,,",
            "1,1,ab,false,a,b",
        ]

    def test_even_rows_leave_factors_empty(self):
        buf = io.StringIO()
        farey_to_csv(enumerate_farey(2), buf)
        rows = {r.split(",")[0] + "/" + r.split(",")[1]: r for r in buf.getvalue().splitlines()[1:]}
        assert rows["1/2"].endswith("true,,")


@given(st.integers(0, 500))
def test_depth_recursion(i):
    slopes = [s for s in coprime_slopes(30) if s not in ((0, 1), (1, 0))]
    p, q = slopes[i % len(slopes)]
    lo, hi = farey_parents(p, q)
    assert slope_depth(p, q) == 1 + max(slope_depth(*lo), slope_depth(*hi))

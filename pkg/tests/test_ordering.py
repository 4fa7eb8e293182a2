"""Magnus-expansion ordering, property suites, and orderability verdicts."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orderlex.laurent import LaurentPolynomial, parse_polynomial
from orderlex.linalg import RationalMatrix
from orderlex.ordering import (
    Comparison,
    OrderStatus,
    bi_order_axiom_suite,
    clay_rolfsen_verdict,
    has_positive_real_eigenvalue,
    lemma_comm_suite,
    magnus_compare,
    magnus_expand,
    random_reduced_word,
)
from orderlex.words import FreeWord, commutator, parse_word


def L(s):
    return parse_polynomial(s)


def W(s, rank=2):
    return parse_word(s, rank)


words_st = st.lists(
    st.tuples(st.integers(min_value=1, max_value=2), st.sampled_from((1, -1))),
    max_size=8,
).map(FreeWord)


class TestMagnusExpansion:
    def test_generator(self):
        s = magnus_expand(W("a"), depth=3, rank=2)
        assert s.coefficient(()) == 1
        assert s.coefficient((1,)) == 1
        assert s.coefficient((1, 1)) == 0

    def test_inverse_is_geometric_series(self):
        s = magnus_expand(W("A"), depth=3, rank=2)
        assert s.coefficient((1,)) == -1
        assert s.coefficient((1, 1)) == 1
        assert s.coefficient((1, 1, 1)) == -1

    def test_commutator_leading_term(self):
        s = magnus_expand(commutator(W("a"), W("b")), depth=2, rank=2)
        assert s.coefficient((1, 2)) == 1
        assert s.coefficient((2, 1)) == -1
        assert s.coefficient((1,)) == 0
        assert s.coefficient((2,)) == 0

    def test_empty_word_is_one(self):
        s = magnus_expand(FreeWord.empty(), depth=4, rank=2)
        assert s.coefficients == {(): 1}

    @given(words_st, words_st)
    def test_multiplicative(self, u, v):
        su = magnus_expand(u, depth=4, rank=2)
        sv = magnus_expand(v, depth=4, rank=2)
        assert su.multiply(sv).coefficients == magnus_expand(u * v, depth=4, rank=2).coefficients


class TestMagnusCompare:
    def test_positive_generators(self):
        assert magnus_compare(W("a"), FreeWord.empty()) is Comparison.GREATER
        assert magnus_compare(W("A"), FreeWord.empty()) is Comparison.LESS

    def test_equality_only_on_equal_words(self):
        assert magnus_compare(W("ab"), W("ab")) is Comparison.EQUAL
        assert magnus_compare(W("ab"), W("ba")) is not Comparison.EQUAL

    def test_antisymmetric_pairs(self):
        u, v = W("abA"), W("bb")
        c1 = magnus_compare(u, v)
        c2 = magnus_compare(v, u)
        flip = {Comparison.LESS: Comparison.GREATER, Comparison.GREATER: Comparison.LESS}
        assert c2 is flip[c1]

    def test_commutator_below_generator(self):
        # b > 1 forces [a, b] < b
        assert magnus_compare(commutator(W("a"), W("b")), W("b")) is Comparison.LESS

    def test_deep_agreement_with_shallow(self):
        rng = random.Random(0)
        for _ in range(50):
            u = random_reduced_word(rng, 2, max_len=6)
            v = random_reduced_word(rng, 2, max_len=6)
            shallow = magnus_compare(u, v, depth=2)
            if shallow in (Comparison.LESS, Comparison.GREATER):
                assert magnus_compare(u, v, depth=6) is shallow

    @given(words_st)
    def test_word_vs_itself_times_positive(self, w):
        assert magnus_compare(w * W("a"), w) is Comparison.GREATER


class TestSuites:
    def test_comm_suite_clean(self):
        report = lemma_comm_suite(2, 60, depth=6, seed=5)
        assert report["violations"] == 0
        assert report["trials"] == 60
        assert set(report) == {"trials", "resolved", "unresolved", "violations", "depth"}

    def test_axiom_suite_clean(self):
        report = bi_order_axiom_suite(2, 60, depth=6, seed=5)
        assert report["violations"] == 0

    def test_rank3(self):
        assert lemma_comm_suite(3, 30, depth=6, seed=2)["violations"] == 0
        assert bi_order_axiom_suite(3, 30, depth=6, seed=2)["violations"] == 0

    def test_deterministic_given_seed(self):
        a = bi_order_axiom_suite(2, 40, depth=6, seed=9)
        b = bi_order_axiom_suite(2, 40, depth=6, seed=9)
        assert a == b


class TestVerdicts:
    def test_biorderable(self):
        v = clay_rolfsen_verdict(L("t^2 - 3*t + 1"))
        assert v.status is OrderStatus.BIORDERABLE
        assert v.positive_root_count == 2

    def test_obstructed(self):
        v = clay_rolfsen_verdict(L("t^2 - t + 1"))
        assert v.status is OrderStatus.OBSTRUCTED
        assert v.positive_root_count == 0

    def test_obstructed_negative_real(self):
        assert clay_rolfsen_verdict(L("t^2 + 3*t + 1")).status is OrderStatus.OBSTRUCTED

    def test_inconclusive(self):
        # one positive root, one negative: neither criterion fires
        v = clay_rolfsen_verdict(L("t^2 - t - 2"))
        assert v.status is OrderStatus.INCONCLUSIVE
        assert v.positive_root_count == 1

    def test_constant_is_obstructed(self):
        assert clay_rolfsen_verdict(L("1")).status is OrderStatus.OBSTRUCTED

    def test_unit_invariance(self):
        p = L("t^2 - 3*t + 1")
        q = p.shift(-1) * LaurentPolynomial({0: Fraction(-5)})
        assert clay_rolfsen_verdict(p) == clay_rolfsen_verdict(q)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            clay_rolfsen_verdict(LaurentPolynomial.zero())


class TestPositiveEigenvalue:
    def test_triangular_positive_diagonal(self):
        m = RationalMatrix(
            [
                [Fraction(2), Fraction(-7), Fraction(3)],
                [Fraction(0), Fraction(1), Fraction(5)],
                [Fraction(0), Fraction(0), Fraction(9)],
            ]
        )
        assert has_positive_real_eigenvalue(m)

    def test_rotation_has_none(self):
        m = RationalMatrix([[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(0)]])
        assert not has_positive_real_eigenvalue(m)

    def test_negative_identity(self):
        m = RationalMatrix([[Fraction(-1), Fraction(0)], [Fraction(0), Fraction(-1)]])
        assert not has_positive_real_eigenvalue(m)

"""Sturm counting of positive real roots against constructed ground truth."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orderlex.laurent import LaurentPolynomial, parse_polynomial
from orderlex.roots import (
    all_roots_real_positive,
    common_positive_root_count,
    sturm_positive_root_count,
)


def L(s):
    return parse_polynomial(s)


def linear_factor(root):
    """t - root with an exact rational root."""
    return LaurentPolynomial({1: Fraction(1), 0: -Fraction(root)})


class TestSturmCounts:
    def test_known_quadratics(self):
        # roots (3 +- sqrt5)/2 both positive
        assert sturm_positive_root_count(L("t^2 - 3*t + 1")) == 2
        # roots (-3 +- sqrt5)/2 both negative
        assert sturm_positive_root_count(L("t^2 + 3*t + 1")) == 0
        # complex conjugate pair
        assert sturm_positive_root_count(L("t^2 - t + 1")) == 0

    def test_mixed_signs(self):
        assert sturm_positive_root_count(L("t^2 - 1")) == 1
        assert sturm_positive_root_count(L("t^3 - t")) == 1

    def test_multiplicity_ignored(self):
        assert sturm_positive_root_count(L("t^2 - 2*t + 1")) == 1
        assert sturm_positive_root_count(L("t^4 - 2*t^2 + 1")) == 1

    def test_constant(self):
        assert sturm_positive_root_count(L("5")) == 0

    def test_zero_raises(self):
        with pytest.raises(ValueError):
            sturm_positive_root_count(LaurentPolynomial.zero())

    def test_laurent_unit_invariance(self):
        p = L("t^2 - 3*t + 1")
        shifted = p.shift(-4) * LaurentPolynomial({0: Fraction(7)})
        assert sturm_positive_root_count(shifted) == 2

    @given(
        st.lists(
            st.fractions(
                min_value=Fraction(-5),
                max_value=Fraction(5),
                max_denominator=6,
            ),
            min_size=1,
            max_size=5,
        )
    )
    def test_constructed_rational_roots(self, roots):
        p = LaurentPolynomial.one()
        for r in roots:
            p = p * linear_factor(r)
        expected = len({r for r in roots if r > 0})
        assert sturm_positive_root_count(p) == expected


class TestAllRootsRealPositive:
    def test_true_cases(self):
        assert all_roots_real_positive(L("t^2 - 3*t + 1"))
        assert all_roots_real_positive(L("t - 1"))
        # multiplicity does not spoil the property
        assert all_roots_real_positive(L("t^2 - 2*t + 1"))

    def test_false_cases(self):
        assert not all_roots_real_positive(L("t^2 + 1"))
        assert not all_roots_real_positive(L("t^2 - 1"))
        assert not all_roots_real_positive(L("t^2 + 3*t + 1"))

    def test_constant_warns_vacuous(self):
        with pytest.warns(RuntimeWarning):
            assert all_roots_real_positive(L("3"))

    def test_zero_raises(self):
        with pytest.raises(ValueError):
            all_roots_real_positive(LaurentPolynomial.zero())


class TestCommonRoots:
    def test_shared_factor(self):
        p = L("t^2 - 3*t + 1")
        q = L("t^4 - 7*t^2 + 1")  # (t^2-3t+1)(t^2+3t+1)
        assert common_positive_root_count(p, q) == 2

    def test_disjoint(self):
        assert common_positive_root_count(L("t - 1"), L("t - 2")) == 0

    def test_multiplicity_insensitive(self):
        assert common_positive_root_count(L("t^2 - 2*t + 1"), L("t - 1")) == 1

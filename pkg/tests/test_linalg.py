"""Exact rational/polynomial linear algebra: determinants, characteristic
polynomials, Smith normal form over Q[t], homology invariant factors."""

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from orderlex.errors import ConsistencyError, SingularMatrixError
from orderlex.laurent import (
    LaurentPolynomial,
    divides,
    exact_div,
    parse_polynomial,
    poly_gcd,
)
from orderlex.linalg import (
    PolynomialMatrix,
    RationalMatrix,
    char_poly,
    homology_invariant_factors,
    smith_normal_form,
)


def L(s):
    return parse_polynomial(s)


def QM(rows):
    return RationalMatrix([[Fraction(x) for x in r] for r in rows])


def PM(rows):
    return PolynomialMatrix([[L(str(x)) for x in r] for r in rows])


def random_poly_matrix(rng, n, max_deg=2, span=3):
    entries = [
        [
            LaurentPolynomial(
                {e: Fraction(rng.randint(-span, span)) for e in range(max_deg + 1)}
            )
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    return PolynomialMatrix(entries)


def determinantal_divisor_chain(pm):
    """gcd of all k x k minors, for k = 1..n; the brute-force route."""
    n = pm.rows
    chain = []
    for k in range(1, n + 1):
        acc = LaurentPolynomial.zero()
        for rs in combinations(range(n), k):
            for cs in combinations(range(n), k):
                acc = poly_gcd(acc, pm.submatrix(rs, cs).det())
        chain.append(acc.canonicalize())
    return chain


def factors_from_divisors(chain):
    out = []
    prev = LaurentPolynomial.one()
    for d in chain:
        if d.is_zero:
            out.append(LaurentPolynomial.zero())
        else:
            out.append(exact_div(d, prev).canonicalize())
            prev = d
    return out


class TestRationalMatrix:
    def test_det_known(self):
        assert QM([[2, 1], [1, 1]]).det() == 1
        assert QM([[1, 2], [2, 4]]).det() == 0

    def test_inverse(self):
        m = QM([[2, 1], [1, 1]])
        inv = m.inverse()
        assert (m * inv).is_identity()
        assert (inv * m).is_identity()

    def test_inverse_singular(self):
        with pytest.raises(SingularMatrixError):
            QM([[1, 2], [2, 4]]).inverse()

    def test_char_poly_known(self):
        # trace 3, det 1
        assert char_poly(QM([[2, 1], [1, 1]])) == L("t^2 - 3*t + 1")
        # trace -3, det 1
        assert char_poly(QM([[-2, -1], [-1, -1]])) == L("t^2 + 3*t + 1")
        assert char_poly(RationalMatrix.identity(3)) == L("t^3 - 3*t^2 + 3*t - 1")

    def test_char_poly_matches_det_route(self):
        rng = random.Random(3)
        for _ in range(10):
            n = rng.randint(1, 4)
            m = QM([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
            direct = char_poly(m)
            via_det = (PolynomialMatrix.identity(n) * L("t") - PolynomialMatrix.from_rational(m)).det()
            assert direct == via_det

    def test_power(self):
        m = QM([[2, 1], [1, 1]])
        assert m.power(2).trace() == 7
        assert m.power(0).is_identity()
        assert (m.power(-1) * m).is_identity()


class TestPolynomialMatrixDet:
    def test_det_known(self):
        m = PM([["t - 2", "-1"], ["-1", "t - 1"]])
        assert m.det() == L("t^2 - 3*t + 1")

    def test_det_with_laurent_entries(self):
        tinv = LaurentPolynomial({-1: Fraction(1)})
        m = PolynomialMatrix([[tinv, L("1")], [L("1"), L("t")]])
        assert m.det().is_zero

    def test_det_multiplicative(self):
        rng = random.Random(5)
        for _ in range(5):
            a = random_poly_matrix(rng, 3, max_deg=1, span=2)
            b = random_poly_matrix(rng, 3, max_deg=1, span=2)
            assert (a * b).det() == a.det() * b.det()


class TestSmithNormalForm:
    def test_upper_triangular_pair(self):
        # divisor chain of [[t-1,1],[0,t-1]] is 1 | (t-1)^2
        factors = smith_normal_form(PM([["t - 1", "1"], ["0", "t - 1"]]))
        assert [str(f) for f in factors] == ["1", "t^2 - 2*t + 1"]

    def test_t_is_a_unit(self):
        # over the Laurent ring t is invertible, so [[t,1],[0,t]] has unit
        # determinant and trivial invariant factors
        factors = smith_normal_form(PM([["t", "1"], ["0", "t"]]))
        assert [str(f) for f in factors] == ["1", "1"]

    def test_diagonal_rearranged_into_chain(self):
        # diag(t-1, t+1) has coprime entries, so the chain is
        # 1 | (t-1)(t+1)
        m = PM([["t - 1", "0"], ["0", "t + 1"]])
        factors = smith_normal_form(m)
        assert [str(f) for f in factors] == ["1", "t^2 - 1"]

    def test_zero_matrix(self):
        factors = smith_normal_form(PolynomialMatrix.zeros(2, 2))
        assert all(f.is_zero for f in factors)

    def test_identity(self):
        factors = smith_normal_form(PolynomialMatrix.identity(3))
        assert all(f.is_one for f in factors)

    def test_divisibility_chain_random(self):
        rng = random.Random(11)
        for _ in range(15):
            n = rng.randint(1, 4)
            m = random_poly_matrix(rng, n)
            factors = [f for f in m.smith_normal_form() if not f.is_zero]
            for a, b in zip(factors, factors[1:]):
                assert divides(a, b)

    def test_matches_determinantal_divisors_random(self):
        rng = random.Random(12)
        for _ in range(10):
            m = random_poly_matrix(rng, 3)
            got = [f.canonicalize() for f in m.smith_normal_form()]
            expected = factors_from_divisors(determinantal_divisor_chain(m))
            assert got == expected

    def test_det_equals_factor_product_up_to_unit(self):
        rng = random.Random(13)
        for _ in range(10):
            m = random_poly_matrix(rng, 3)
            prod = LaurentPolynomial.one()
            for f in m.smith_normal_form():
                prod = prod * f
            assert prod.canonicalize() == m.det().canonicalize()

    def test_rank_and_kernel(self):
        m = PM([["t", "t"], ["t", "t"]])
        assert m.rank() == 1
        basis = m.kernel_basis()
        assert len(basis) == 1


class TestHomologyInvariantFactors:
    def test_exact_pair(self):
        # b1 * b2 = 0 with b2 presenting a (t-1)-torsion module
        b1 = PM([["t - 1", "0"]])
        b2 = PM([["0"], ["t - 1"]])
        factors, free_rank = homology_invariant_factors(b1, b2)
        assert [str(f) for f in factors] == ["t - 1"]
        assert free_rank == 0

    def test_free_part_detected(self):
        b1 = PolynomialMatrix.zeros(1, 2)
        b2 = PolynomialMatrix.zeros(2, 1)
        factors, free_rank = homology_invariant_factors(b1, b2)
        assert factors == []
        assert free_rank == 2

    def test_rejects_non_complex(self):
        b1 = PM([["1", "0"]])
        b2 = PM([["1"], ["0"]])
        with pytest.raises(ConsistencyError):
            homology_invariant_factors(b1, b2)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_char_poly_root_trace_consistency(rows):
    m = QM(rows)
    p = char_poly(m)
    assert p.degree == 3
    assert p.leading_coefficient == 1
    # coefficient of t^(n-1) is -trace, constant term is (-1)^n det
    assert p.coefficient(2) == -m.trace()
    assert p.coefficient(0) == -m.det()

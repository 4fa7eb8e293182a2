"""Mapping-torus presentations and classical/twisted polynomial computation."""

from fractions import Fraction

import pytest

from orderlex.autos import automorphism, figure_eight_monodromy, identity_automorphism
from orderlex.errors import CertificationError, RepresentationError
from orderlex.finite import (
    TorusHomomorphism,
    cyclic_group,
    direct_sum,
    regular_representation,
    symmetric_group,
    trivial_representation,
)
from orderlex.laurent import parse_polynomial, substitute_power
from orderlex.linalg import RationalMatrix
from orderlex.torus import (
    MappingTorus,
    classical_alexander,
    lemma4_check,
    lemma5_check,
    presentation,
    twisted_alexander,
)
from orderlex.words import format_word, parse_word


def L(s):
    return parse_polynomial(s)


def fig8():
    return MappingTorus(2, figure_eight_monodromy(), label="figure-eight")


def z2_regular(m):
    g = cyclic_group(2)
    f = TorusHomomorphism(g, (g.identity(),) * m.fiber_rank, g.element(1))
    f.require_well_defined(m.monodromy)
    return regular_representation(f)


class TestConstruction:
    def test_requires_certified_monodromy(self):
        from orderlex.freegroup import FreeEndomorphism

        uncertified = FreeEndomorphism(2, figure_eight_monodromy().images)
        with pytest.raises(CertificationError):
            MappingTorus(2, uncertified)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            MappingTorus(3, figure_eight_monodromy())

    def test_presentation_relators(self):
        m = fig8()
        rels = presentation(m)
        assert len(rels) == 2
        shown = [format_word(r, stable_index=m.stable_index) for r in rels]
        # t x_i t^-1 theta(x_i)^-1, freely reduced
        assert shown[0] == "taTABA"
        assert shown[1] == "tbTBA"


class TestClassical:
    def test_fig8(self):
        res = classical_alexander(fig8())
        assert res.polynomial == L("t^2 - 3*t + 1")
        assert [str(f) for f in res.invariant_factors] == ["t^2 - 3*t + 1"]
        assert res.free_rank == 0

    def test_identity_monodromy(self):
        m = MappingTorus(2, identity_automorphism(2))
        res = classical_alexander(m)
        assert res.polynomial == L("t^2 - 2*t + 1")

    def test_inverting_generator(self):
        m = MappingTorus(1, automorphism(1, ("A",), ("A",)))
        assert classical_alexander(m).polynomial == L("t + 1")

    def test_rank3_cycle(self):
        m = MappingTorus(3, automorphism(3, ("b", "c", "a"), ("c", "a", "b")))
        assert classical_alexander(m).polynomial == L("t^3 - 1")


class TestTwisted:
    def test_fig8_z2_regular(self):
        # block determinant worked out by hand:
        # (t^2-3t+1)(t^2+3t+1) = t^4 - 7t^2 + 1
        m = fig8()
        res = twisted_alexander(m, z2_regular(m))
        assert res.polynomial == L("t^4 - 7*t^2 + 1")
        assert res.free_rank == 0

    def test_trivial_rep_recovers_classical(self):
        m = fig8()
        direct = twisted_alexander(m, trivial_representation(2))
        assert direct.polynomial == classical_alexander(m).polynomial

    def test_trivial_rep_on_battery_member(self):
        m = MappingTorus(2, automorphism(2, ("ab", "b"), ("aB", "b")))
        assert (
            twisted_alexander(m, trivial_representation(2)).polynomial
            == classical_alexander(m).polynomial
        )

    def test_d_scale_substitutes(self):
        m = fig8()
        rep = z2_regular(m)
        base = twisted_alexander(m, rep).polynomial
        for d in (2, 3):
            scaled = twisted_alexander(m, rep, d_scale=d).polynomial
            assert scaled == substitute_power(base, d).canonicalize()

    def test_d_scale_validated(self):
        m = fig8()
        with pytest.raises(ValueError):
            twisted_alexander(m, trivial_representation(2), d_scale=0)

    def test_rejects_incompatible_representation(self):
        m = fig8()
        # sign representation violates t b t^-1 = theta(b) for this monodromy
        sign = RationalMatrix([[Fraction(-1)]])
        one = RationalMatrix.identity(1)
        from orderlex.finite import FiniteRepresentation

        rep = FiniteRepresentation((sign, sign), one)
        with pytest.raises(RepresentationError):
            twisted_alexander(m, rep)

    def test_invariant_factors_multiply_to_polynomial(self):
        m = fig8()
        res = twisted_alexander(m, z2_regular(m))
        prod = L("1")
        for f in res.invariant_factors:
            prod = prod * f
        assert prod.canonicalize() == res.polynomial.canonicalize()

    def test_identity_monodromy_z2(self):
        # cyclic double cover of F_2 x S^1 along t
        m = MappingTorus(2, identity_automorphism(2))
        res = twisted_alexander(m, z2_regular(m))
        assert res.polynomial == L("t^4 - 2*t^2 + 1")


class TestLemma4:
    def test_rescaling(self):
        m = fig8()
        rep = z2_regular(m)
        for d in (2, 3):
            report = lemma4_check(m, rep, d)
            assert report["equal"], report
            assert report["d"] == d

    def test_report_keys(self):
        m = fig8()
        report = lemma4_check(m, trivial_representation(2), 2)
        assert set(report) == {"d", "direct", "rescaled", "equal"}


class TestLemma5:
    def test_trivial_pair(self):
        m = fig8()
        assert lemma5_check(m, trivial_representation(2), trivial_representation(2))

    def test_mixed_pair(self):
        m = fig8()
        assert lemma5_check(m, trivial_representation(2), z2_regular(m))

    def test_direct_sum_polynomial_is_product(self):
        m = fig8()
        a = trivial_representation(2)
        b = z2_regular(m)
        merged = twisted_alexander(m, direct_sum(a, b)).polynomial
        prod = twisted_alexander(m, a).polynomial * twisted_alexander(m, b).polynomial
        assert merged == prod.canonicalize()

    def test_s3_image_pair(self):
        m = MappingTorus(2, identity_automorphism(2))
        g = symmetric_group(3)
        f = TorusHomomorphism(g, (g.element(1), g.element(2)), g.identity())
        f.require_well_defined(m.monodromy)
        rep = regular_representation(f)
        assert rep.dimension == 6
        assert lemma5_check(m, rep, trivial_representation(2))

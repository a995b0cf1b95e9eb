"""Brace layer: the multiplication built from a matrix pair, the validity
verdict, and the holomorph closure property.
"""

import pytest
from hypothesis import given, strategies as st

from conftest import ALL_FIXTURE_SPECS, ROW_SPECS, TRIVIAL_SPEC

from z2brace import (
    BraceSpec,
    HolElement,
    IDENTITY,
    Mat2,
    NotUnimodular,
    RowLabel,
    Vec2,
    ZERO,
    act,
    brace_axiom_holds,
    check_pair,
    enumerate_unimodular,
    h_lambda_closed,
    hol_mul,
    in_lambda_kernel,
    lambda_of,
    odot,
    odot_associative,
    odot_inverse,
)

M_2110 = Mat2(2, 1, -1, 0)
SPEC_12 = BraceSpec(M_2110, M_2110)
# Commuting pair that is not a brace: the second power identity fails.
SPEC_BAD = BraceSpec(Mat2(1, 1, 0, 1), IDENTITY)

vectors = st.builds(Vec2, st.integers(-4, 4), st.integers(-4, 4))
valid_specs = st.sampled_from(ALL_FIXTURE_SPECS)


class TestVec2:
    def test_add_and_negate(self):
        assert Vec2(1, 2) + Vec2(3, 4) == Vec2(4, 6)
        assert -ZERO == ZERO

    @given(a=vectors)
    def test_additive_inverse(self, a):
        assert a + (-a) == ZERO


class TestBraceSpec:
    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            BraceSpec(Mat2(2, 0, 0, 2), IDENTITY)

    def test_json_round_trip(self):
        data = {"phi": [[2, 1], [-1, 0]], "psi": [[1, 0], [0, 1]]}
        spec = BraceSpec.from_dict(data)
        assert spec.to_dict() == data

    def test_from_dict_rejects_extra_keys(self):
        with pytest.raises(ValueError):
            BraceSpec.from_dict({"phi": [[1, 0], [0, 1]]})


class TestLambda:
    @given(a=vectors)
    def test_trivial_spec_is_constant(self, a):
        assert lambda_of(TRIVIAL_SPEC, a) == IDENTITY

    def test_exponent_sum(self):
        assert lambda_of(SPEC_12, Vec2(1, 1)) == Mat2(3, 2, -2, -1)

    def test_cancelling_exponents(self):
        assert lambda_of(SPEC_12, Vec2(1, -1)) == IDENTITY

    @given(a=vectors, b=vectors)
    def test_homomorphic_whenever_pair_commutes(self, a, b):
        # Needs only commutation, not validity: SPEC_BAD qualifies.
        for spec in (SPEC_12, SPEC_BAD):
            assert lambda_of(spec, a + b) == lambda_of(spec, a) * lambda_of(spec, b)


class TestOdot:
    def test_trivial_spec_is_addition(self):
        assert odot(TRIVIAL_SPEC, Vec2(1, 2), Vec2(3, 4)) == Vec2(4, 6)

    def test_generator_product(self):
        assert odot(SPEC_12, Vec2(1, 0), Vec2(0, 1)) == Vec2(2, 0)

    @given(spec=valid_specs, b=vectors)
    def test_zero_is_left_identity(self, spec, b):
        assert odot(spec, ZERO, b) == b

    def test_inverse_examples(self):
        assert odot_inverse(TRIVIAL_SPEC, Vec2(1, 2)) == Vec2(-1, -2)
        assert odot_inverse(SPEC_12, Vec2(1, 0)) == Vec2(0, -1)
        assert odot_inverse(SPEC_12, ZERO) == ZERO

    @given(spec=valid_specs, a=vectors)
    def test_inverse_is_two_sided_for_valid_specs(self, spec, a):
        inv = odot_inverse(spec, a)
        assert odot(spec, a, inv) == ZERO
        assert odot(spec, inv, a) == ZERO


class TestKernel:
    @given(spec=valid_specs)
    def test_zero_in_kernel(self, spec):
        assert in_lambda_kernel(spec, ZERO)

    def test_cancelling_vector(self):
        assert in_lambda_kernel(SPEC_12, Vec2(1, -1))

    def test_shear_generator_not_in_kernel(self):
        assert not in_lambda_kernel(SPEC_BAD, Vec2(1, 0))


class TestCheckPair:
    def test_trivial_pair_valid(self):
        verdict = check_pair(TRIVIAL_SPEC)
        assert verdict.valid and verdict.commuting
        assert all(verdict.power_identities)
        assert all(verdict.kernel_identities)

    def test_known_family_valid(self):
        assert check_pair(SPEC_12).valid

    def test_shear_pair_fails_second_identity(self):
        verdict = check_pair(SPEC_BAD)
        assert not verdict.valid
        assert verdict.commuting
        assert verdict.power_identities == (True, False, True, True)

    def test_verdict_consistency_over_small_box(self):
        # The entry-exponent and kernel-membership readings agree pairwise
        # on every unimodular pair with entries in [-1, 1].
        candidates = list(enumerate_unimodular(1))
        for phi in candidates:
            for psi in candidates:
                verdict = check_pair(BraceSpec(phi, psi))
                assert verdict.power_identities == verdict.kernel_identities
                assert verdict.valid == (
                    verdict.commuting and all(verdict.power_identities)
                )


class TestBraceAxiom:
    @given(spec=valid_specs, a=vectors, b=vectors, c=vectors)
    def test_holds_for_valid_specs(self, spec, a, b, c):
        assert brace_axiom_holds(spec, a, b, c)

    @given(a=vectors, b=vectors, c=vectors)
    def test_holds_even_for_invalid_homomorphic_pair(self, a, b, c):
        # The compatibility law is automatic once lambda comes from matrix
        # powers; what fails for bad pairs is associativity.
        assert brace_axiom_holds(SPEC_BAD, a, b, c)


class TestAssociativity:
    def test_negative_witness(self):
        a, b, c = Vec2(1, 0), Vec2(0, 1), Vec2(0, 1)
        assert odot(SPEC_BAD, a, odot(SPEC_BAD, b, c)) == Vec2(3, 2)
        assert odot(SPEC_BAD, odot(SPEC_BAD, a, b), c) == Vec2(4, 2)
        assert not odot_associative(SPEC_BAD, a, b, c)

    @given(spec=valid_specs, a=vectors, b=vectors, c=vectors)
    def test_holds_for_valid_specs(self, spec, a, b, c):
        assert odot_associative(spec, a, b, c)


class TestHolomorph:
    def test_identity_element(self):
        h = HolElement(Vec2(3, -2), M_2110)
        assert hol_mul(HolElement(ZERO, IDENTITY), h) == h

    def test_product_example(self):
        left = HolElement(Vec2(1, 0), M_2110)
        right = HolElement(Vec2(0, 1), M_2110)
        assert hol_mul(left, right) == HolElement(Vec2(2, 0), Mat2(3, 2, -2, -1))

    def test_projection_is_first_coordinate(self):
        left = HolElement(Vec2(1, 2), M_2110)
        right = HolElement(Vec2(-1, 3), IDENTITY)
        product = hol_mul(left, right)
        assert product.g == left.g + act(left.f, right.g)

    def test_rejects_non_unimodular_automorphism(self):
        with pytest.raises(NotUnimodular):
            HolElement(ZERO, Mat2(1, 0, 0, 2))

    @given(spec=valid_specs, a=vectors, b=vectors)
    def test_lambda_graph_closed_for_valid_specs(self, spec, a, b):
        assert h_lambda_closed(spec, a, b)

    def test_lambda_graph_not_closed_for_bad_pair(self):
        assert not h_lambda_closed(SPEC_BAD, Vec2(1, 0), Vec2(0, 1))


class TestRowFixturesAreValid:
    @pytest.mark.parametrize("label", list(RowLabel), ids=lambda l: l.value)
    def test_fixture_valid(self, label):
        assert check_pair(ROW_SPECS[label]).valid

"""Matrix layer: algebra, normalization, classification, fixed points."""

import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palcore.config import DEFAULT_TOLERANCES as TOL
from palcore.errors import IdentityElement, SingularMatrix
from palcore.sl2c import (
    INFINITY,
    GroupElement,
    boundary_from_json,
    boundary_key,
    boundary_to_json,
    chordal_distance,
    classify,
    fixed_points,
    is_identity,
    matrix_from_json,
    normalize,
    psl_distance,
    psl_equal,
)

from .conftest import loxodromic_between, random_loxodromic, random_mobius


class TestAlgebra:
    def test_identity_element(self):
        e = GroupElement.identity()
        assert e.entries() == (1, 0, 0, 1)
        assert e.det() == 1
        assert e.trace() == 2

    def test_product_and_inverse(self):
        g = GroupElement(2, 1, 1, 1)
        h = g * g.inverse()
        assert psl_equal(h, GroupElement.identity(), 1e-15)

    def test_inverse_is_adjugate(self):
        g = GroupElement(3, 2, 4, 3)  # det 1
        assert g.inverse().entries() == (3, -2, -4, 3)

    def test_linear_ops(self):
        g = GroupElement(1, 2, 3, 4)
        h = GroupElement(4, 3, 2, 1)
        assert (g + h).entries() == (5, 5, 5, 5)
        assert (g - h).entries() == (-3, -1, 1, 3)
        assert (-g).entries() == (-1, -2, -3, -4)

    def test_apply_moebius(self):
        g = GroupElement(1, 1, 0, 1)  # z + 1
        assert g.apply(2 + 0j) == 3 + 0j
        assert g.apply(INFINITY) is INFINITY

    def test_apply_pole_goes_to_infinity(self):
        g = GroupElement(0, 1, -1, 0)  # -1/z
        assert g.apply(0j) is INFINITY
        assert g.apply(INFINITY) == 0

    def test_max_norm(self):
        assert GroupElement(1, -3j, 2, 0).max_norm() == 3.0


class TestNormalize:
    def test_rescales_to_det_one(self):
        g = GroupElement(2, 0, 0, 2)
        n = normalize(g, TOL)
        assert abs(n.det() - 1) < 1e-14

    def test_rejects_singular(self):
        with pytest.raises(SingularMatrix):
            normalize(GroupElement(1, 1, 1, 1), TOL)

    def test_scale_invariant_up_to_sign(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_mobius(rng)
            lam = complex(rng.uniform(0.5, 2), rng.uniform(-1, 1))
            scaled = GroupElement(*(lam * e for e in g.entries()))
            assert psl_distance(normalize(scaled, TOL), g) < 1e-12


class TestProjectiveEquality:
    def test_sign_is_quotiented(self):
        g = GroupElement(2, 1, 1, 1)
        assert psl_equal(g, -g, 1e-15)
        assert psl_distance(g, -g) == 0.0

    def test_distinct_elements_are_far(self):
        assert not psl_equal(GroupElement(2, 1, 1, 1), GroupElement.identity(), 1e-6)

    def test_is_identity_both_signs(self):
        assert is_identity(GroupElement.identity(), 1e-12)
        assert is_identity(-GroupElement.identity(), 1e-12)
        assert not is_identity(GroupElement(1, 1e-3, 0, 1), 1e-12)


class TestClassify:
    def test_canonical_forms(self):
        assert classify(GroupElement(1, 1, 0, 1), TOL) == "parabolic"
        assert classify(GroupElement(2, 0, 0, 0.5), TOL) == "loxodromic"
        t = cmath.exp(0.4j)
        assert classify(GroupElement(t, 0, 0, 1 / t), TOL) == "elliptic"
        assert classify(GroupElement.identity(), TOL) == "identity"
        assert classify(-GroupElement.identity(), TOL) == "identity"

    def test_complex_trace_is_loxodromic(self):
        # tr^2 real and < 4 means elliptic only for real trace
        g = GroupElement(1.2 * cmath.exp(0.3j), 0, 0, 1 / (1.2 * cmath.exp(0.3j)))
        assert classify(g, TOL) == "loxodromic"

    def test_conjugation_invariance(self):
        rng = random.Random(5)
        for _ in range(25):
            g = random_loxodromic(rng)
            h = random_mobius(rng)
            assert classify(h * g * h.inverse(), TOL) == classify(g, TOL)


class TestFixedPoints:
    def test_points_are_fixed(self):
        rng = random.Random(23)
        for _ in range(30):
            g = random_loxodromic(rng)
            for z in fixed_points(g, TOL):
                assert chordal_distance(g.apply(z), z) < 1e-8

    def test_diagonal_case_sorted(self):
        g = GroupElement(2, 0, 0, 0.5)
        assert fixed_points(g, TOL) == (0j, INFINITY)

    def test_parabolic_double_point(self):
        g = GroupElement(1, 0, 3, 1)
        p, q = fixed_points(g, TOL)
        assert p == q == 0j
        assert fixed_points(GroupElement(1, 2, 0, 1), TOL) == (INFINITY, INFINITY)

    def test_identity_raises(self):
        with pytest.raises(IdentityElement):
            fixed_points(GroupElement.identity(), TOL)

    def test_close_fixed_points_stay_accurate(self):
        x = 1e-3
        g = loxodromic_between(complex(x), complex(-x), 2.0 + 0j)
        p, q = fixed_points(g, TOL)
        assert min(abs(p - x), abs(p + x)) < 1e-12
        assert min(abs(q - x), abs(q + x)) < 1e-12


class TestBoundary:
    def test_key_orders_infinity_last(self):
        pts = [INFINITY, 1 + 0j, -2 + 5j, 1 - 3j]
        assert sorted(pts, key=boundary_key)[-1] is INFINITY

    def test_key_is_lexicographic(self):
        assert boundary_key(1 + 2j) < boundary_key(2 - 5j)
        assert boundary_key(1 - 2j) < boundary_key(1 + 2j)

    def test_chordal_metric(self):
        assert chordal_distance(0j, INFINITY) == 2.0
        assert chordal_distance(INFINITY, INFINITY) == 0.0
        assert chordal_distance(1 + 0j, 1 + 0j) == 0.0
        assert abs(chordal_distance(0j, 1 + 0j) - math.sqrt(2)) < 1e-15

    def test_chordal_symmetry(self):
        rng = random.Random(3)
        for _ in range(20):
            u = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            v = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            assert chordal_distance(u, v) == chordal_distance(v, u)
            assert chordal_distance(u, INFINITY) == chordal_distance(INFINITY, u)


class TestJson:
    def test_matrix_round_trip(self):
        g = GroupElement(1 + 2j, -0.5, 3j, 0.25 - 1j)
        assert matrix_from_json(g.to_json()).entries() == g.entries()

    def test_row_form(self):
        g = matrix_from_json([[1, 2], [3, 4]])
        assert g.entries() == (1, 2, 3, 4)

    def test_row_form_complex_entries(self):
        g = matrix_from_json([[[0, 1], 2], [3, [4, -1]]])
        assert g.entries() == (1j, 2, 3, 4 - 1j)

    def test_boundary_round_trip(self):
        assert boundary_from_json(boundary_to_json(INFINITY)) is INFINITY
        z = 1.5 - 2j
        assert boundary_from_json(boundary_to_json(z)) == z


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_normalized_conjugation_preserves_trace_squared(seed):
    rng = random.Random(seed)
    g = random_loxodromic(rng)
    h = random_mobius(rng)
    conj = h * g * h.inverse()
    assert abs(conj.trace() ** 2 - g.trace() ** 2) < 1e-8 * max(
        1.0, abs(g.trace()) ** 2
    )

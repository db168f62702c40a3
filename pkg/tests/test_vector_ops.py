"""Tests for face-vector transforms, identity residuals and inequality checks."""

import math

import numpy as np
import pytest

from src.exceptions import (
    BadIndex,
    BettiPreconditionViolated,
    DimensionTooSmall,
    EmptyBoundary,
    LengthMismatch,
    NegativeInput,
    WrongParity,
)
from src.operations.vector_ops import (
    binom,
    boundary_duality_residual,
    ds_boundary_residual,
    ds_closed_residual,
    f_from_middle_betti,
    f_to_h,
    g_vector,
    gbar,
    h2_boundary_check,
    h_dprime_boundary,
    h_dprime_closed,
    h_from_h_prime,
    h_prime,
    h_to_f,
    hprime_ds_residual,
    hprime_growth_check,
    hprime_surjectivity_check,
    kalai_comparison,
    kalai_monotonicity_check,
    kuhnel_general_check,
    kuhnel_middle_check,
    macaulay_bounds,
    mk_reference,
    pseudopower,
    reference_h_prime_low,
)

TORUS_F = [1, 7, 21, 14]
TORUS_H = [1, 4, 10, -1]
TORUS_BETTI = [0, 2, 1]
TORUS_H_PRIME = [1, 4, 10, 1]

RP2_F = [1, 6, 15, 10]
RP2_BETTI_GF2 = [0, 1, 1]

CP2_F = [1, 9, 36, 84, 90, 36]
CP2_H = [1, 4, 10, 20, -1, 2]
CP2_BETTI = [0, 0, 1, 0, 1]
CP2_H_PRIME = [1, 4, 10, 20, 4, 1]
CP2_H_DPRIME = [1, 4, 10, 10, 4, 1]

MOBIUS_H = [1, 2, 3, -1]
MOBIUS_BETTI = [0, 1, 0]


class TestTransforms:
    """Test f <-> h, g and the Betti-corrected vectors."""

    def test_binom_outside_range(self):
        assert binom(5, 2) == 10
        assert binom(2, 5) == 0
        assert binom(3, -1) == 0

    def test_f_to_h(self):
        assert f_to_h(TORUS_F, 3) == TORUS_H
        assert f_to_h(CP2_F, 5) == CP2_H

    def test_h_to_f_inverts_f_to_h(self):
        for f, d in ((TORUS_F, 3), (RP2_F, 3), (CP2_F, 5)):
            assert h_to_f(f_to_h(f, d), d) == f

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_f_h_roundtrip_on_random_vectors(self, seed):
        rng = np.random.default_rng(seed)
        for d in range(1, 8):
            f = [int(x) for x in rng.integers(-50, 50, size=d + 1)]
            h = [int(x) for x in rng.integers(-50, 50, size=d + 1)]
            assert h_to_f(f_to_h(f, d), d) == f
            assert f_to_h(h_to_f(h, d), d) == h

    def test_sphere_h_vector(self):
        """Test that ∂Δ^4 has h = (1, 1, 1, 1)."""
        assert f_to_h([1, 4, 6, 4], 3) == [1, 1, 1, 1]

    def test_g_vector(self):
        assert g_vector([1, 3, 1]) == [1, 2, -2]
        assert g_vector([]) == []

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            f_to_h([1, 7, 21], 3)
        with pytest.raises(LengthMismatch):
            h_prime(TORUS_H, [0, 2], 3)

    def test_h_prime_torus(self):
        assert h_prime(TORUS_H, TORUS_BETTI, 3) == TORUS_H_PRIME
        assert h_from_h_prime(TORUS_H_PRIME, TORUS_BETTI, 3) == TORUS_H

    def test_h_prime_cp2(self):
        assert h_prime(CP2_H, CP2_BETTI, 5) == CP2_H_PRIME

    def test_h_dprime_closed(self):
        assert h_dprime_closed(TORUS_H_PRIME, TORUS_BETTI, 3) == [1, 4, 4, 1]
        assert h_dprime_closed([1, 3, 6, 1], RP2_BETTI_GF2, 3) == [1, 3, 3, 1]
        assert h_dprime_closed(CP2_H_PRIME, CP2_BETTI, 5) == CP2_H_DPRIME

    def test_gbar_of_mobius_boundary(self):
        """Test ḡ of the 5-cycle bounding the Möbius band."""
        assert gbar([1, 3, 1], [0, 1], 3) == [1, 2, -2, 0]

    def test_h_dprime_boundary_mobius(self):
        h_prime_ = h_prime(MOBIUS_H, MOBIUS_BETTI, 3)
        assert h_prime_ == [1, 2, 3, 0]
        values, midpoint = h_dprime_boundary(h_prime_, [1, 2, -2, 0], [0, 1, 0], MOBIUS_BETTI, 3)
        assert values == [0, 0, 0, 0]
        assert midpoint is None

    def test_h_dprime_boundary_needs_gbar(self):
        with pytest.raises(EmptyBoundary):
            h_dprime_boundary([1, 2, 3, 0], [], [0, 1, 0], MOBIUS_BETTI, 3)


class TestPseudopower:
    """Test the real-x Macaulay pseudopower."""

    def test_exact_binomial(self):
        """Test that 3 = C(3,2) gives C(4,3) = 4."""
        assert pseudopower(3, 2) == 4.0
        assert pseudopower(4, 1) == 10.0

    def test_between_binomials(self):
        """Test 4^{<2>} with x = (1 + √33)/2."""
        assert pseudopower(4, 2) == pytest.approx(5.829708, abs=1e-5)
        assert pseudopower(2.5, 1) == pytest.approx(4.375, abs=1e-6)

    def test_zero(self):
        assert pseudopower(0, 3) == 0.0

    def test_monotone(self):
        values = [pseudopower(m, 2) for m in range(1, 30)]
        assert values == sorted(values)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_monotone_on_random_values(self, seed):
        rng = np.random.default_rng(seed)
        for i in range(1, 7):
            ms = sorted(int(m) for m in rng.integers(1, 10**6, size=40))
            values = [pseudopower(m, i) for m in ms]
            assert values == sorted(values)
            assert all(value >= m for value, m in zip(values, ms))

    def test_exact_on_every_binomial(self):
        for i in range(1, 7):
            for a in range(i, 61):
                assert pseudopower(math.comb(a, i), i) == math.comb(a + 1, i + 1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(NegativeInput):
            pseudopower(-1, 2)
        with pytest.raises(BadIndex):
            pseudopower(3, 0)


class TestIdentityResiduals:
    """Test the Dehn-Sommerville style identities."""

    def test_ds_closed(self):
        assert ds_closed_residual(TORUS_H, -1, 3).residuals == [0, 0, 0, 0]
        report = ds_closed_residual(CP2_H, 2, 5)
        assert report.passed
        assert report.relation == "eq"

    def test_ds_closed_detects_wrong_euler(self):
        assert not ds_closed_residual(TORUS_H, 0, 3).passed

    def test_ds_boundary_mobius(self):
        report = ds_boundary_residual(MOBIUS_H, -1, g_vector([1, 3, 1, 0]), 3)
        assert report.residuals == [0, 0, 0, 0]
        assert report.passed

    def test_hprime_ds(self):
        report = hprime_ds_residual(TORUS_H_PRIME, TORUS_BETTI, 3)
        assert report.indices == [0, 1]
        assert report.passed
        assert hprime_ds_residual(CP2_H_PRIME, CP2_BETTI, 5).passed

    def test_boundary_duality_mobius(self):
        report = boundary_duality_residual([1, 2, 3, 0], [1, 2, -2, 0], [0, 1, 0], MOBIUS_BETTI, 3)
        assert report.residuals == [0, 0, 0]
        assert report.passed


class TestInequalities:
    """Test slacks of the bounds on closed manifolds."""

    def test_macaulay_torus(self):
        report = macaulay_bounds(TORUS_H_PRIME, TORUS_BETTI, 3)
        assert report.passed
        assert report.residuals[:4] == [4, 4, 0, 0]
        assert report.residuals[4] == pytest.approx(4.829708, abs=1e-5)
        assert report.context["bounds"] == ["lower", "lower", "lower", "upper", "upper"]

    def test_macaulay_violation(self):
        """Test that h′_2 above the pseudopower bound fails."""
        assert not macaulay_bounds([1, 2, 5, 1], [0, 0, 1], 3).passed

    def test_kuhnel_middle_torus_is_tight(self):
        report = kuhnel_middle_check(7, TORUS_BETTI, 3)
        assert report.residuals == [0]
        assert report.context["equality"]
        assert report.assertions["lower_betti_vanish"]
        assert report.assertions["vertex_count_at_least_3k_plus_3"]
        assert report.passed

    def test_kuhnel_middle_rp2_and_cp2(self):
        assert kuhnel_middle_check(6, RP2_BETTI_GF2, 3).residuals == [0]
        assert kuhnel_middle_check(9, CP2_BETTI, 5).residuals == [0]

    def test_kuhnel_middle_parity(self):
        with pytest.raises(WrongParity):
            kuhnel_middle_check(9, [0, 0, 0, 1], 4)

    def test_kuhnel_general(self):
        assert kuhnel_general_check(7, TORUS_BETTI, 3, 0).residuals == [3]
        slacks = [kuhnel_general_check(9, CP2_BETTI, 5, j).residuals[0] for j in (0, 1)]
        assert slacks == [3, 6]

    def test_kuhnel_general_equality_asserts_neighborliness(self):
        """Test two disjoint 3-spheres on 5 + 5 vertices, where 5 β̃_0 = C(5, 1)."""
        tight = kuhnel_general_check(10, [1, 0, 0, 0], 4, 0, neighborly=1)
        assert tight.residuals == [0]
        assert tight.assertions == {"other_betti_vanish": True, "neighborly": True}
        assert tight.passed
        assert not kuhnel_general_check(10, [1, 0, 0, 0], 4, 0, neighborly=0).passed

    def test_kuhnel_general_violation(self):
        report = kuhnel_general_check(9, [0, 1, 0, 0, 1], 5, 1)
        assert report.residuals == [-9]
        assert not report.passed

    def test_kuhnel_general_index(self):
        with pytest.raises(BadIndex):
            kuhnel_general_check(7, TORUS_BETTI, 3, 1)

    def test_kalai_monotonicity(self):
        assert kalai_monotonicity_check([1, 4, 4, 1], TORUS_BETTI, 3).residuals == [3]
        assert kalai_monotonicity_check([1, 3, 3, 1], RP2_BETTI_GF2, 3).residuals == [2]
        assert kalai_monotonicity_check(CP2_H_DPRIME, CP2_BETTI, 5).residuals == [3, 6]

    def test_surjectivity_and_growth(self):
        assert hprime_surjectivity_check(TORUS_H_PRIME, TORUS_BETTI, 3).residuals == [3]
        assert hprime_growth_check(TORUS_H_PRIME, TORUS_BETTI, 3).residuals == [3]
        assert hprime_surjectivity_check(CP2_H_PRIME, CP2_BETTI, 5).residuals == [3, 6]
        assert hprime_growth_check(CP2_H_PRIME, CP2_BETTI, 5).residuals == [3, 6]


class TestBoundaryH2:
    """Test the lower bound on h_2 for manifolds with boundary."""

    def test_tight_in_dimension_five(self):
        report = h2_boundary_check(10, 0, 1, 0, 5, 2)
        assert report.residuals == [0]
        assert report.context["equality"]
        assert report.passed

    def test_dimension_four_coefficients(self):
        report = h2_boundary_check(10, 1, 2, 0, 4, 2)
        assert report.residuals == [3]

    def test_dimension_four_needs_characteristic_two(self):
        with pytest.raises(DimensionTooSmall):
            h2_boundary_check(10, 0, 1, 0, 4, 3)

    def test_dimension_too_small(self):
        with pytest.raises(DimensionTooSmall):
            h2_boundary_check(3, 0, 0, 0, 3, 2)


class TestReferenceManifolds:
    """Test the minimal 2k-manifolds with a single middle Betti number."""

    def test_reference_low_entries(self):
        assert reference_h_prime_low(1) == [1, 3]
        assert reference_h_prime_low(2) == [1, 4, 10]

    def test_k_one_is_rp2(self):
        reference = mk_reference(1)
        assert reference.h_prime == [1, 3, 6, 1]
        assert reference.h == [1, 3, 6, 0]
        assert reference.f == RP2_F
        assert reference.h_dprime == [1, 3, 3, 1]

    def test_k_two_is_cp2(self):
        reference = mk_reference(2)
        assert reference.h_prime == CP2_H_PRIME
        assert reference.h == CP2_H
        assert reference.f == CP2_F

    def test_bad_k(self):
        with pytest.raises(BadIndex):
            mk_reference(0)

    def test_f_from_middle_betti(self):
        f, coefficients = f_from_middle_betti([1, 3], 1, 1)
        assert f == RP2_F
        assert coefficients == [3, 2]
        f, coefficients = f_from_middle_betti([1, 4, 10], 1, 2)
        assert f == CP2_F
        assert coefficients == [10, 15, 6]

    def test_kalai_comparison(self):
        report = kalai_comparison(TORUS_F, TORUS_BETTI, 1)
        assert report.residuals == [1, 6, 4]
        assert report.assertions["betti_coefficients_nonnegative"]
        assert kalai_comparison(CP2_F, CP2_BETTI, 2).residuals == [0, 0, 0, 0, 0]

    def test_kalai_comparison_precondition(self):
        with pytest.raises(BettiPreconditionViolated):
            kalai_comparison(CP2_F, [0, 1, 1, 0, 1], 2)
        with pytest.raises(BettiPreconditionViolated):
            kalai_comparison(RP2_F, [0, 0, 0], 1)

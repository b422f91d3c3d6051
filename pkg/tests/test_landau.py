"""Unit tests for Landau levels, eigenfunctions, and boundary coefficients."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import eval_genlaguerre

from landauwall.errors import DomainError
from landauwall.landau import (
    Params,
    boundary_coeff,
    boundary_coeff_asymptotic,
    cyclotron_radius,
    eigenfunction_radial,
    landau_level,
    peak_radius,
    radial_probability,
    resonance_index,
)


class TestParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            Params(-1.0, 1.0)
        with pytest.raises(DomainError):
            Params(1.0, 0.0)

    def test_x(self):
        assert Params(2.0, 3.0).x == pytest.approx(9.0)


class TestLevels:
    def test_values(self):
        assert landau_level(1.0, 0) == 1.0
        assert landau_level(1.0, 3) == 7.0
        assert landau_level(0.5, 2) == 2.5

    def test_cyclotron_radius(self):
        assert cyclotron_radius(1.0, 0) == 1.0
        assert cyclotron_radius(1.0, 3) == pytest.approx(math.sqrt(7.0))


class TestBoundaryCoeff:
    def test_hand_value(self):
        # c_{0,0} at B=1, a=1: a B e^{-1/2}
        c = boundary_coeff(1.0, 1.0, 0, 0).to_real()
        assert c == pytest.approx(math.exp(-0.5), rel=1e-14)

    def test_m_symmetry_bit_exact(self):
        for n, m in [(0, 3), (2, 7), (1, 40)]:
            cp = boundary_coeff(1.3, 0.9, n, m)
            cm = boundary_coeff(1.3, 0.9, n, -m)
            assert cp == cm

    def test_positive_generically(self):
        rng = np.random.default_rng(11)
        for _ in range(500):
            B = float(rng.uniform(0.3, 3.0))
            a = float(rng.uniform(0.3, 3.0))
            n = int(rng.integers(0, 5))
            m = int(rng.integers(-12, 13))
            c = boundary_coeff(B, a, n, m)
            assert c.sign >= 0
            assert c.to_real() >= 0.0

    def test_zero_at_laguerre_zero(self):
        # x = B a^2/2 = 1 is the zero of L_1
        c = boundary_coeff(1.0, math.sqrt(2.0), 1, 0).to_real()
        assert abs(c) < 1e-13

    def test_against_direct_formula(self):
        for B, a, n, m in [(1.0, 1.1, 2, 3), (0.7, 2.0, 1, 5), (2.0, 0.8, 3, 0)]:
            x = 0.5 * B * a * a
            ref = (a * B * math.exp(-x) * x ** abs(m)
                   * math.gamma(n + 1) / math.gamma(n + abs(m) + 1)
                   * eval_genlaguerre(n, abs(m), x) ** 2)
            assert boundary_coeff(B, a, n, m).to_real() == pytest.approx(
                ref, rel=1e-11)

    def test_asymptotic_ratio_to_one(self):
        # corrected large-|m| form: exact / asymptotic -> 1
        for n in (0, 1, 2):
            ratios = []
            for m in (20, 60, 160):
                exact = boundary_coeff(1.0, 1.1, n, m)
                asym = boundary_coeff_asymptotic(1.0, 1.1, n, m)
                ratios.append(math.exp(exact.log_abs - asym.log_abs))
            assert abs(ratios[-1] - 1.0) < 0.05
            if n == 0:
                # the n = 0 asymptotic form is exact
                assert ratios == pytest.approx([1.0, 1.0, 1.0], rel=1e-12)
            else:
                assert abs(ratios[-1] - 1.0) < abs(ratios[0] - 1.0)

    def test_super_exponential_decay(self):
        logs = [boundary_coeff(1.0, 1.1, 0, m).log_abs for m in range(41)]
        ratios = [logs[m + 1] - logs[m] for m in range(40)]
        assert min(ratios) < -3.0  # some ratio below e^{-3}
        # eventually monotone decreasing ratio
        tail = ratios[20:]
        assert all(tail[i + 1] < tail[i] for i in range(len(tail) - 1))


class TestEigenfunctions:
    @pytest.mark.parametrize("n,m", [(0, 0), (1, 0), (2, 3), (3, 10), (1, -4)])
    def test_normalization(self, n, m):
        B = 1.0
        rp = peak_radius(B, n, m)
        upper = 6.0 * rp + 10.0 / math.sqrt(B)
        val, _ = quad(lambda r: radial_probability(B, n, m, r), 0.0, upper,
                      limit=200)
        assert val == pytest.approx(1.0, abs=1e-6)

    def test_peak_radius_ground_state(self):
        for m in (0, 3, 4, 8):
            assert peak_radius(1.0, 0, m) == pytest.approx(
                math.sqrt(2 * m + 1), abs=1e-7)

    def test_radial_probability_nonnegative(self):
        r = np.linspace(0.0, 6.0, 200)
        vals = [radial_probability(1.0, 2, 1, ri) for ri in r]
        assert min(vals) >= 0.0


class TestResonanceIndex:
    def test_exact_value(self):
        val, rounded = resonance_index(1.0, 3.0, 0)
        assert val == 4.0
        assert rounded == 4

    def test_ties_to_even(self):
        # B a^2/2 - 1/2 = 2.5 rounds to 2 under banker's rounding
        val, rounded = resonance_index(1.0, math.sqrt(6.0), 0)
        assert val == pytest.approx(2.5, abs=1e-12)
        assert rounded == 2

    def test_domain(self):
        with pytest.raises(DomainError):
            resonance_index(0.0, 1.0, 0)

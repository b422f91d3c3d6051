"""Unit tests for the Weyl coefficient evaluation machinery."""

import math

import numpy as np
import pytest

from landauwall.errors import PoleError
from landauwall.landau import Params, boundary_coeff, landau_level
from landauwall.weyl import (
    WeylSettings,
    h_remainder,
    mu,
    mu_derivative,
    pole_residue,
)

# independently computed 35-digit references (closed-form integral evaluated
# in mpmath; see the repository notes for the derivation)
REF_MU_B1_A1_M0_Z0 = 0.78284352192276437
REF_MU_B1_A11_M0_Z2 = -0.35302943556398164


class TestMu:
    def test_reference_values(self):
        assert mu(Params(1.0, 1.0), 0, 0.0).value == pytest.approx(
            REF_MU_B1_A1_M0_Z0, rel=1e-10)
        assert mu(Params(1.0, 1.1), 0, 2.0).value == pytest.approx(
            REF_MU_B1_A11_M0_Z2, rel=1e-10)

    def test_m_symmetry(self):
        p = Params(1.0, 1.1)
        assert mu(p, 5, 2.0).value == mu(p, -5, 2.0).value

    def test_herglotz_example(self):
        v = mu(Params(1.0, 1.0), 0, complex(2.0, 0.1)).value
        assert v.imag > 0.0

    def test_tail_bound_invariant(self):
        settings = WeylSettings()
        for e in (-5.0, 0.5, 2.0, 4.2):
            ev = mu(Params(1.0, 1.1), 1, e, settings)
            assert ev.tail_bound <= 10.0 * settings.term_tol * max(
                1.0, abs(ev.value))

    def test_pole_guard(self):
        with pytest.raises(PoleError):
            mu(Params(1.0, 1.1), 0, 3.0)
        with pytest.raises(PoleError):
            mu(Params(1.0, 1.1), 0, 1.0 + 1e-14)

    def test_edge_blowup(self):
        p = Params(1.0, 1.1)
        assert mu(p, 0, 1.0 + 1e-8).value < -1e6
        assert mu(p, 0, 3.0 - 1e-8).value > 1e6

    def test_below_lowest_positive_decaying(self):
        p = Params(1.0, 1.1)
        assert mu(p, 0, 0.0).value > 0.0
        far = mu(p, 0, -1e6).value
        assert 0.0 < far < 1e-3

    def test_monotone_on_gap_sample(self):
        rng = np.random.default_rng(3)
        p = Params(1.0, 1.1)
        for _ in range(30):
            n = int(rng.integers(0, 5))
            m = int(rng.integers(0, 20))
            lo, hi = landau_level(1.0, n), landau_level(1.0, n + 1)
            e1, e2 = sorted(rng.uniform(lo + 1e-3, hi - 1e-3, size=2))
            if e2 - e1 < 1e-6:
                continue
            assert mu(p, m, e1).value < mu(p, m, e2).value

    def test_truncation_stability(self):
        base = WeylSettings()
        tight = WeylSettings(term_tol=base.term_tol / 2,
                             n_max_cap=2 * base.n_max_cap)
        for e in (0.2, 2.0, 4.5):
            v1 = mu(Params(1.0, 1.1), 2, e, base).value
            v2 = mu(Params(1.0, 1.1), 2, e, tight).value
            assert abs(v1 - v2) <= 1e-11 * max(1.0, abs(v1))

    def test_settings_validation(self):
        with pytest.raises(ValueError):
            WeylSettings(term_tol=0.0)
        with pytest.raises(ValueError):
            WeylSettings(n_max_cap=0)


class TestMuDerivative:
    def test_positive_and_fd_agreement(self):
        p = Params(1.0, 1.0)
        d = mu_derivative(p, 0, 2.0).value
        assert d > 0.0
        h = 1e-5
        fd = (mu(p, 0, 2.0 + h).value - mu(p, 0, 2.0 - h).value) / (2 * h)
        assert d == pytest.approx(fd, rel=1e-5)

    def test_divergence_near_edge(self):
        p = Params(1.0, 1.0)
        near = mu_derivative(p, 0, 1.0 + 1e-4).value
        mid = mu_derivative(p, 0, 2.0).value
        assert near > 1e4 * mid


class TestHRemainder:
    def test_definition(self):
        p = Params(1.0, 1.1)
        for n, e in [(0, 2.0), (1, 2.5), (2, 4.0)]:
            m = 1
            lhs = mu(p, m, e).value - h_remainder(p, m, n, e).value
            c = boundary_coeff(1.0, 1.1, n, m).to_real()
            rhs = c / (landau_level(1.0, n) - e)
            assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_finite_at_own_level(self):
        p = Params(1.0, 1.1)
        v = h_remainder(p, 0, 0, 1.0).value
        assert math.isfinite(v)
        assert v > 0.0

    def test_vanishes_for_large_m(self):
        p = Params(1.0, 1.1)
        vals = [h_remainder(p, m, 0, 1.0).value for m in range(0, 61, 10)]
        assert all(v > 0.0 for v in vals)
        # decay in m is slow (roughly 1/m) but strictly monotone
        assert all(vals[i + 1] < vals[i] for i in range(len(vals) - 1))
        assert vals[-1] < vals[0] / 20.0

    def test_pole_at_other_level(self):
        with pytest.raises(PoleError):
            h_remainder(Params(1.0, 1.1), 0, 0, 3.0)


class TestPoleResidue:
    def test_hand_value(self):
        chk = pole_residue(Params(1.0, 1.0), 0, 0)
        assert chk.value == pytest.approx(math.exp(-0.5), rel=1e-12)
        assert chk.rel_err <= 1e-8
        assert not chk.underflow

    def test_laguerre_zero(self):
        chk = pole_residue(Params(1.0, math.sqrt(2.0)), 0, 1)
        assert abs(chk.value) < 1e-13
        assert chk.rel_err < 1e-8  # absolute comparison kicks in near the zero

    def test_extrapolation_agreement(self):
        chk = pole_residue(Params(1.0, 1.1), 2, 1)
        assert chk.rel_err <= 1e-8

"""Unit tests for the log-domain special function layer."""

import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, iv

from landauwall.errors import DomainError
from landauwall.specfun import (
    SignedLog,
    bessel_i,
    laguerre,
    laguerre_ratio_seq,
    laguerre_scaled,
    laguerre_zeros,
    log_bessel_i,
    log_gamma,
)


class TestSignedLog:
    def test_roundtrip(self):
        for v in (2.5, -1e-200, 7e150, -3.0):
            sl = SignedLog.from_real(v)
            assert sl.to_real() == pytest.approx(v, rel=1e-13)

    def test_zero(self):
        sl = SignedLog.from_real(0.0)
        assert sl.sign == 0
        assert sl.log_abs == -math.inf
        assert sl.to_real() == 0.0

    def test_multiplication(self):
        a = SignedLog.from_real(-3.0)
        b = SignedLog.from_real(0.5)
        assert (a * b).to_real() == pytest.approx(-1.5, rel=1e-15)
        z = SignedLog.from_real(0.0)
        assert (a * z).sign == 0

    def test_invariant_enforced(self):
        with pytest.raises(ValueError):
            SignedLog(sign=0, log_abs=1.0)


class TestLogGamma:
    def test_matches_lgamma(self):
        for x in (0.5, 1.0, 7.3, 150.0):
            assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_gamma(0.0)


class TestLaguerre:
    def test_against_scipy(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            n = int(rng.integers(0, 30))
            k = int(rng.integers(0, 40))
            x = float(rng.uniform(0.0, 20.0))
            ref = eval_genlaguerre(n, k, x)
            assert laguerre(n, k, x) == pytest.approx(ref, rel=1e-10, abs=1e-10)

    def test_scaled_consistency(self):
        for n, k, x in [(3, 5, 1.7), (10, 0, 0.3), (6, 25, 4.0)]:
            ratio, log_binom = laguerre_scaled(n, k, x)
            assert ratio * math.exp(log_binom) == pytest.approx(
                laguerre(n, k, x), rel=1e-10)

    def test_ratio_seq_matches_pointwise(self):
        seq = laguerre_ratio_seq(4, 1.3, 12)
        for n in range(13):
            ratio, _ = laguerre_scaled(n, 4, 1.3)
            assert seq[n] == pytest.approx(ratio, rel=1e-12, abs=1e-300)


class TestLaguerreZeros:
    def test_n1(self):
        for k in (0, 3, 11):
            zeros = laguerre_zeros(1, k)
            assert len(zeros) == 1
            assert zeros[0] == pytest.approx(1.0 + k, rel=1e-12)

    def test_n2_quadratic(self):
        # L_2(x) = (x^2 - 4x + 2)/2, roots 2 +- sqrt(2)
        zeros = laguerre_zeros(2, 0)
        assert zeros[0] == pytest.approx(2.0 - math.sqrt(2.0), rel=1e-12)
        assert zeros[1] == pytest.approx(2.0 + math.sqrt(2.0), rel=1e-12)

    def test_sorted_positive_count(self):
        zeros = laguerre_zeros(7, 2)
        assert len(zeros) == 7
        assert all(z > 0 for z in zeros)
        assert list(zeros) == sorted(zeros)

    def test_zeros_are_zeros(self):
        for z in laguerre_zeros(5, 3):
            assert abs(laguerre(5, 3, z)) < 1e-9


class TestBesselI:
    def test_small_args(self):
        for m, z in [(0, 0.5), (3, 2.0), (10, 7.5)]:
            assert bessel_i(m, z) == pytest.approx(iv(m, z), rel=1e-12)

    def test_log_large_args(self):
        # compare against the scaled scipy value to dodge overflow
        from scipy.special import ive
        for m, z in [(0, 400.0), (5, 650.0), (40, 500.0)]:
            ref = math.log(ive(m, z)) + z
            assert log_bessel_i(m, z) == pytest.approx(ref, rel=1e-10)

    def test_zero_argument(self):
        assert bessel_i(0, 0.0) == 1.0
        assert bessel_i(4, 0.0) == 0.0

"""Numerically stable special-function kernels.

Generalized Laguerre polynomials (direct and binomial-scaled), log-gamma,
modified Bessel I, and Laguerre zero finding.  Everything here is a pure
function of its arguments; coefficients that would over/underflow in
binary64 are carried as :class:`SignedLog`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError

__all__ = [
    "SignedLog",
    "log_gamma",
    "laguerre",
    "laguerre_scaled",
    "laguerre_ratio_seq",
    "bessel_i",
    "log_bessel_i",
    "laguerre_zeros",
]


@dataclass(frozen=True)
class SignedLog:
    """A real number stored as sign and log of absolute value.

    ``sign == 0`` iff ``log_abs == -inf`` (the representation of zero).
    """

    sign: int
    log_abs: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be in {{-1,0,+1}}, got {self.sign}")
        if (self.sign == 0) != (self.log_abs == -math.inf):
            raise DomainError("sign == 0 must coincide with log_abs == -inf")

    @classmethod
    def from_real(cls, x: float) -> "SignedLog":
        if x == 0.0:
            return cls(0, -math.inf)
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def to_real(self) -> float:
        """Exponentiate back to a float; underflows quietly to 0.0."""
        if self.sign == 0:
            return 0.0
        if self.log_abs > 709.0:  # exp overflow threshold
            return self.sign * math.inf
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: "SignedLog") -> "SignedLog":
        s = self.sign * other.sign
        if s == 0:
            return SignedLog(0, -math.inf)
        return SignedLog(s, self.log_abs + other.log_abs)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def laguerre(n: int, k: int, x: float) -> float:
    """Generalized Laguerre polynomial L_n^{(k)}(x) by three-term recurrence.

    Intended for moderate n, k where the value fits a binary64; for large k
    use :func:`laguerre_scaled`.
    """
    _check_lag_args(n, k, x)
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + k - x
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + k - x) * cur - (j + k) * prev) / (j + 1)
    return cur


def laguerre_scaled(n: int, k: int, x: float) -> tuple[float, float]:
    """Return (ratio, log_binom) with ratio = L_n^{(k)}(x) / binom(n+k, n).

    The ratio is computed from the finite sum with each binomial quotient
    expanded as a product of n or fewer factors, so it stays well scaled even
    for k in the thousands.  The unscaled value is sign(ratio) *
    exp(log|ratio| + log_binom).
    """
    _check_lag_args(n, k, x)
    log_binom = log_gamma(n + k + 1) - log_gamma(n + 1) - log_gamma(k + 1)
    total = 1.0
    term = 1.0
    for j in range(1, n + 1):
        # binom(n+k, n-j)/binom(n+k, n-j+1) = (n-j+1)/(k+j)
        term *= -x * (n - j + 1) / (j * (k + j))
        total += term
    return total, log_binom


def laguerre_ratio_seq(k: int, x: float, n_max: int) -> np.ndarray:
    """Sequence L_j^{(k)}(x) / binom(j+k, j) for j = 0..n_max.

    Overflow-free recurrence used by the Weyl-coefficient machinery, where
    thousands of consecutive Laguerre values of the same order are needed.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = (1.0 + k - x) / (k + 1)
    for j in range(1, n_max):
        out[j + 1] = ((2 * j + 1 + k - x) * out[j] - j * out[j - 1]) / (k + j + 1)
    return out


def bessel_i(m: int, z: float) -> float:
    """Modified Bessel function I_m(z) by the ascending series.

    Restricted to 0 <= z <= 700 so neither the terms nor the sum overflow.
    """
    if m < 0:
        raise DomainError(f"order must be >= 0, got {m}")
    if not 0.0 <= z <= 700.0:
        raise DomainError(f"bessel_i requires 0 <= z <= 700, got {z}")
    if z == 0.0:
        return 1.0 if m == 0 else 0.0
    q = 0.25 * z * z
    term = math.exp(m * math.log(0.5 * z) - math.lgamma(m + 1))
    total = term
    j = 0
    while term >= 1e-17 * total:
        j += 1
        term *= q / (j * (m + j))
        total += term
    return total


def log_bessel_i(m: int, z: float) -> float:
    """ln I_m(z), stable for large order where I_m underflows in binary64."""
    if m < 0 or z < 0:
        raise DomainError("log_bessel_i requires m >= 0 and z >= 0")
    if z == 0.0:
        return 0.0 if m == 0 else -math.inf
    q = 0.25 * z * z
    lead = m * math.log(0.5 * z) - math.lgamma(m + 1)
    # scaled series: sum_j q^j / (j! (m+1)_j); for z >> m this needs many
    # terms but each factor is < 1 once j > z/2, so it always terminates
    term = 1.0
    total = 1.0
    shift = 0.0
    j = 0
    while term >= 1e-18 * total:
        j += 1
        term *= q / (j * (m + j))
        total += term
        if total > 1e250:  # renormalize to avoid overflow of the partial sum
            shift += math.log(total)
            term /= total
            total = 1.0
    return lead + shift + math.log(total)


def laguerre_zeros(n: int, k: int) -> list[float]:
    """The n positive roots of L_n^{(k)}, ascending.

    Computed as eigenvalues of the symmetric tridiagonal Jacobi matrix with
    diagonal 2j+k+1 (j=0..n-1) and off-diagonal sqrt(j(j+k)) (j=1..n-1).
    """
    if n < 0 or k < 0:
        raise DomainError("laguerre_zeros requires n >= 0 and k >= 0")
    if n == 0:
        return []
    diag = np.array([2.0 * j + k + 1.0 for j in range(n)])
    if n == 1:
        return [float(diag[0])]
    off = np.array([math.sqrt(j * (j + k)) for j in range(1, n)])
    vals = eigh_tridiagonal(diag, off, eigvals_only=True)
    return [float(v) for v in np.sort(vals)]


def _check_lag_args(n: int, k: int, x: float) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"Laguerre indices must be >= 0, got n={n}, k={k}")
    if x < 0:
        raise DomainError(f"Laguerre argument must be >= 0, got x={x}")

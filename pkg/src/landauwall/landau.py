"""Landau-level structure, eigenfunction radial data, and boundary coefficients.

The wall couples to the free eigenfunctions only through their traces on the
circle r = a; the squared trace norms c_{n,m} computed here are the residues
of the Weyl coefficients and control the whole broadened spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .specfun import SignedLog, laguerre_scaled, log_gamma

__all__ = [
    "Params",
    "landau_level",
    "norm_const_sq",
    "eigenfunction_radial",
    "radial_probability",
    "peak_radius",
    "boundary_coeff",
    "boundary_coeff_asymptotic",
    "resonance_index",
    "cyclotron_radius",
]


@dataclass(frozen=True)
class Params:
    """Physical configuration: field strength B, wall radius a, coupling alpha."""

    B: float
    a: float
    alpha: float = 0.0

    def __post_init__(self):
        if not self.B > 0:
            raise DomainError(f"B must be > 0, got {self.B}")
        if not self.a > 0:
            raise DomainError(f"a must be > 0, got {self.a}")

    @property
    def x(self) -> float:
        """Laguerre argument B a^2 / 2 at the wall."""
        return 0.5 * self.B * self.a * self.a


def landau_level(B: float, n: int) -> float:
    """Energy B(2n+1) of the n-th Landau level."""
    if B <= 0 or n < 0:
        raise DomainError("landau_level requires B > 0 and n >= 0")
    return B * (2 * n + 1)


def norm_const_sq(B: float, n: int, m: int) -> SignedLog:
    """|C_{n,m}|^2 = B^{|m|+1} n! / (2^{|m|+1} pi (n+|m|)!), in log form."""
    if B <= 0 or n < 0:
        raise DomainError("norm_const_sq requires B > 0 and n >= 0")
    k = abs(m)
    log_val = (
        (k + 1) * math.log(B)
        + log_gamma(n + 1)
        - (k + 1) * math.log(2.0)
        - math.log(math.pi)
        - log_gamma(n + k + 1)
    )
    return SignedLog(1, log_val)


def eigenfunction_radial(B: float, n: int, m: int, r: float) -> float:
    """Radial factor C_{n,m} r^{|m|} e^{-B r^2/4} L_n^{(|m|)}(B r^2/2).

    Normalized so that the 2D integral of the squared modulus is 1.
    """
    if r < 0:
        raise DomainError("radius must be >= 0")
    k = abs(m)
    if r == 0.0:
        if k > 0:
            return 0.0
        return SignedLog(1, 0.5 * norm_const_sq(B, n, m).log_abs).to_real()
    xr = 0.5 * B * r * r
    ratio, log_binom = laguerre_scaled(n, k, xr)
    if ratio == 0.0:
        return 0.0
    log_mag = (
        0.5 * norm_const_sq(B, n, m).log_abs
        + k * math.log(r)
        - 0.25 * B * r * r
        + math.log(abs(ratio))
        + log_binom
    )
    return SignedLog(1 if ratio > 0 else -1, log_mag).to_real()


def radial_probability(B: float, n: int, m: int, r: float) -> float:
    """Radial probability density 2 pi r |psi_{n,m}(r)|^2; unit integral over r."""
    val = eigenfunction_radial(B, n, m, r)
    return 2.0 * math.pi * r * val * val


def peak_radius(B: float, n: int, m: int) -> float:
    """Argmax over r > 0 of the radial probability density.

    Located by a coarse scan followed by golden-section refinement; for n = 0
    this equals sqrt((2|m|+1)/B) exactly.
    """
    if B <= 0:
        raise DomainError("peak_radius requires B > 0")
    k = abs(m)
    upper = 3.0 * math.sqrt((2 * n + 2 * k + 2) / B)
    num = 2000
    best_i, best_v = 0, -1.0
    for i in range(1, num):
        r = upper * i / num
        v = radial_probability(B, n, m, r)
        if v > best_v:
            best_i, best_v = i, v
    lo = upper * max(best_i - 1, 0) / num
    hi = upper * min(best_i + 1, num) / num
    return _golden_max(lambda r: radial_probability(B, n, m, r), lo, hi, 1e-12 * upper)


def _golden_max(f, lo: float, hi: float, tol: float) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)


def boundary_coeff(B: float, a: float, n: int, m: int) -> SignedLog:
    """Squared trace norm c_{n,m} of psi_{n,m} on the wall circle, in log form.

    Evaluated through the simplified representation
    a B e^{-x} x^{|m|} [n!/(n+|m|)!] L_n^{(|m|)}(x)^2  with  x = B a^2/2,
    with the Laguerre factor handled in binomial-scaled form.
    """
    if B <= 0 or a <= 0 or n < 0:
        raise DomainError("boundary_coeff requires B > 0, a > 0, n >= 0")
    k = abs(m)
    x = 0.5 * B * a * a
    ratio, log_binom = laguerre_scaled(n, k, x)
    if ratio == 0.0:
        return SignedLog(0, -math.inf)
    log_val = (
        math.log(a)
        + math.log(B)
        - x
        + k * math.log(x)
        + log_gamma(n + 1)
        - log_gamma(n + k + 1)
        + 2.0 * (math.log(abs(ratio)) + log_binom)
    )
    return SignedLog(1, log_val)


def boundary_coeff_asymptotic(B: float, a: float, n: int, m: int) -> SignedLog:
    """Leading large-|m| form of c_{n,m}, in log form.

    Replaces the Laguerre factor by its binomial limit, giving
    a B e^{-x} x^{|m|} binom(n+|m|, n) / |m|!.  The ratio of the exact
    coefficient to this value is the squared scaled Laguerre ratio, which
    tends to 1 as |m| -> infinity; for n = 0 the two agree identically.
    """
    if B <= 0 or a <= 0 or n < 0:
        raise DomainError("boundary_coeff_asymptotic requires B > 0, a > 0, n >= 0")
    k = abs(m)
    x = 0.5 * B * a * a
    log_binom = log_gamma(n + k + 1) - log_gamma(n + 1) - log_gamma(k + 1)
    log_val = (
        math.log(a)
        + math.log(B)
        - x
        + k * math.log(x)
        - log_gamma(k + 1)
        + log_binom
    )
    return SignedLog(1, log_val)


def resonance_index(B: float, a: float, n: int) -> tuple[float, int]:
    """Mode index whose cyclotron orbit matches the wall radius.

    Returns a^2 B/2 - (n + 1/2) and its nearest integer (ties to even).
    """
    if B <= 0 or a <= 0 or n < 0:
        raise DomainError("resonance_index requires B > 0, a > 0, n >= 0")
    val = 0.5 * a * a * B - (n + 0.5)
    return val, round(val)


def cyclotron_radius(B: float, n: int) -> float:
    """Classical orbit radius sqrt(2n+1)/sqrt(B) of the n-th level."""
    if B <= 0 or n < 0:
        raise DomainError("cyclotron_radius requires B > 0 and n >= 0")
    return math.sqrt((2 * n + 1) / B)

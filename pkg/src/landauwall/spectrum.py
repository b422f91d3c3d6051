"""Eigenvalue solving in spectral gaps and cluster/shift structure.

Two scalar eigenvalue conditions are supported:

  * ``PAPER``:            alpha - mu_{m,B}(E) = 0
  * ``BIRMAN_SCHWINGER``: 1 + alpha * mu_{m,B}(E) = 0

Both are strictly monotone in E on every gap, so bracketing plus Brent is
complete.  Roots exponentially close to a gap edge (far below the floating
point resolution of E itself) are found in shift coordinates anchored at the
adjacent pole, so the recorded shift stays accurate down to ~1e-300.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import ConfigurationError, DomainError
from .landau import Params, boundary_coeff, landau_level
from .specfun import laguerre_scaled, laguerre_zeros
from .weyl import WeylSettings, h_remainder, mu, mu_derivative

__all__ = [
    "ScalarCondition",
    "Gap",
    "EigenvalueRecord",
    "gap_above",
    "gap_below_lowest",
    "solve_mode",
    "cluster",
    "predicted_shift",
    "special_radii",
    "embedded_kernel_dim",
    "below_lowest",
    "bound_state_radial",
    "bound_state_profile",
]

# roots closer to an edge than this fraction of B are solved in shift
# coordinates anchored at the pole
_EDGE_FRACTION = 1e-6
_EPS_LADDER = (1e-2, 1e-4, 1e-6, 1e-8, 1e-10)


class ScalarCondition(enum.Enum):
    PAPER = "paper"
    BIRMAN_SCHWINGER = "bs"


@dataclass(frozen=True)
class Gap:
    """An open spectral gap; n_gap is the lower-edge level, None below Lambda_0."""

    lower: float
    upper: float
    n_gap: int | None

    def __post_init__(self):
        if not self.lower < self.upper:
            raise DomainError("gap requires lower < upper")


@dataclass(frozen=True)
class EigenvalueRecord:
    n_gap: int | None
    m: int
    E: float
    shift: float
    predicted_shift: float
    multiplicity: int
    condition: ScalarCondition
    iterations: int
    residual: float
    n_used: int = 0


def gap_above(params: Params, n: int) -> Gap:
    """The gap (Lambda_n, Lambda_{n+1})."""
    return Gap(landau_level(params.B, n), landau_level(params.B, n + 1), n)


def gap_below_lowest(params: Params) -> Gap:
    """The interval searched below Lambda_0."""
    e_min = -10.0 * max(1.0, params.alpha ** 2, params.B)
    return Gap(e_min, landau_level(params.B, 0), None)


def _cond_value(cond: ScalarCondition, alpha: float, mu_val: float) -> float:
    if cond is ScalarCondition.PAPER:
        return alpha - mu_val
    return 1.0 + alpha * mu_val


def solve_mode(
    params: Params,
    m: int,
    gap: Gap,
    cond: ScalarCondition = ScalarCondition.PAPER,
    settings: WeylSettings | None = None,
    root_tol: float = 1e-10,
) -> EigenvalueRecord | None:
    """Unique root of the scalar condition in the given gap, or None.

    Brackets by evaluating the condition at distances eps*B from the edges
    with eps descending through the ladder 1e-2..1e-10; a root hiding closer
    to an edge than the innermost rung is recovered from the pole-anchored
    expansion, which stays accurate for shifts far below float resolution.
    """
    if params.alpha == 0.0:
        raise ConfigurationError("scalar condition requires alpha != 0")
    settings = settings or WeylSettings()
    alpha = params.alpha
    B = params.B
    evals = 0

    def phi(e: float) -> float:
        nonlocal evals
        evals += 1
        return _cond_value(cond, alpha, mu(params, m, e, settings).value)

    lower_pole = gap.n_gap is not None
    upper_idx = (gap.n_gap + 1) if gap.n_gap is not None else 0

    for eps in _EPS_LADDER:
        lo = gap.lower + eps * B if lower_pole else gap.lower
        hi = gap.upper - eps * B
        if not lo < hi:
            continue
        f_lo, f_hi = phi(lo), phi(hi)
        if f_lo == 0.0:
            return _record(params, m, gap, cond, lo, evals, 0.0, settings)
        if f_hi == 0.0:
            return _record(params, m, gap, cond, hi, evals, 0.0, settings)
        if f_lo * f_hi < 0.0:
            e_root, res = brentq(
                phi, lo, hi, xtol=root_tol * B * 1e-3, rtol=max(root_tol, 4e-16),
                full_output=True,
            )
            e_root = float(e_root)
            # Newton polish: near a pole the condition is steep, so the
            # bracketing tolerance alone can leave a noticeable residual
            for _ in range(3):
                f = phi(e_root)
                if abs(f) <= 1e-12 * max(1.0, abs(alpha)):
                    break
                dmu = mu_derivative(params, m, e_root, settings).value
                dphi = alpha * dmu if cond is ScalarCondition.BIRMAN_SCHWINGER else -dmu
                if dphi == 0.0 or not math.isfinite(dphi):
                    break
                step = f / dphi
                if not gap.lower < e_root - step < gap.upper:
                    break
                e_root = float(e_root - step)
            # roots hugging an edge are better resolved in the shift domain,
            # where the pole expansion is exact to machine precision
            if lower_pole and e_root - gap.lower < _EDGE_FRACTION * B:
                rec = _anchored_root(params, m, gap, cond, gap.n_gap, +1, settings)
                if rec is not None:
                    return rec
            if gap.upper - e_root < _EDGE_FRACTION * B:
                rec = _anchored_root(params, m, gap, cond, upper_idx, -1, settings)
                if rec is not None:
                    return rec
            return _record(
                params, m, gap, cond, e_root, evals + res.iterations,
                float(abs(phi(e_root))), settings,
            )
        if not lower_pole and f_lo * f_hi > 0.0:
            break  # no pole at the lower end: only the upper edge can hide a root

    # no sign change on the ladder: check for a root hidden behind an edge
    if lower_pole:
        rec = _anchored_root(params, m, gap, cond, gap.n_gap, +1, settings)
        if rec is not None:
            return rec
    rec = _anchored_root(params, m, gap, cond, upper_idx, -1, settings)
    return rec


def _anchored_root(
    params: Params,
    m: int,
    gap: Gap,
    cond: ScalarCondition,
    n_pole: int,
    side: int,
    settings: WeylSettings,
) -> EigenvalueRecord | None:
    """Root within _EDGE_FRACTION*B of Lambda_{n_pole}, via the pole expansion.

    Near the pole mu = -c/delta + h(Lambda + delta) with delta = E - Lambda,
    so the condition solves to a fixed point for delta that converges in a
    few iterations (h is nearly constant on that scale).
    """
    alpha = params.alpha
    B = params.B
    c = boundary_coeff(params.B, params.a, n_pole, m).to_real()
    ratio, _ = laguerre_scaled(n_pole, abs(m), 0.5 * params.B * params.a * params.a)
    if c == 0.0 or abs(ratio) < 1e-13:
        return None  # wall on a Laguerre zero: c is a rounding artifact, no pole
    ln = landau_level(B, n_pole)
    delta = 0.0
    iters = 0
    for _ in range(60):
        e_h = ln + delta if abs(delta) > 1e-9 * B else ln
        h = h_remainder(params, m, n_pole, e_h, settings).value
        if cond is ScalarCondition.PAPER:
            denom = h - alpha
        else:
            denom = h + 1.0 / alpha
        if denom == 0.0:
            return None
        new_delta = float(c / denom)
        iters += 1
        if delta != 0.0 and abs(new_delta - delta) <= 1e-14 * abs(delta):
            delta = new_delta
            break
        delta = new_delta
    if delta * side <= 0.0 or abs(delta) >= _EDGE_FRACTION * B:
        return None  # wrong side, or interior root the bracketing already handled
    e = ln + delta
    if not gap.lower < e < gap.upper and abs(delta) > 1e-13 * B:
        return None
    mu_val = -c / delta + h_remainder(params, m, n_pole, ln, settings).value
    residual = abs(_cond_value(cond, alpha, mu_val))
    shift_ref = gap.n_gap if gap.n_gap is not None else 0
    shift = e - landau_level(B, shift_ref) if n_pole != shift_ref else delta
    return EigenvalueRecord(
        n_gap=gap.n_gap,
        m=m,
        E=e,
        shift=shift,
        predicted_shift=predicted_shift(params, shift_ref, m),
        multiplicity=1 if m == 0 else 2,
        condition=cond,
        iterations=iters,
        residual=residual,
        n_used=0,
    )


def _record(
    params: Params,
    m: int,
    gap: Gap,
    cond: ScalarCondition,
    e: float,
    iters: int,
    residual: float,
    settings: WeylSettings,
) -> EigenvalueRecord:
    ref = gap.n_gap if gap.n_gap is not None else 0
    ev = mu(params, m, e, settings)
    return EigenvalueRecord(
        n_gap=gap.n_gap,
        m=m,
        E=e,
        shift=e - landau_level(params.B, ref),
        predicted_shift=predicted_shift(params, ref, m),
        multiplicity=1 if m == 0 else 2,
        condition=cond,
        iterations=iters,
        residual=abs(residual),
        n_used=ev.n_used,
    )


def cluster(
    params: Params,
    n: int,
    cond: ScalarCondition = ScalarCondition.PAPER,
    settings: WeylSettings | None = None,
    stop_tol: float | None = None,
    m_cap: int = 200,
) -> list[EigenvalueRecord]:
    """Eigenvalues accumulating at Lambda_n, swept over m = 0, 1, 2, ...

    The gap searched sits on the side of Lambda_n where the chosen condition
    predicts accumulation for sign(alpha); under the PAPER form that is above
    for alpha < 0 and below for alpha > 0 (absent for n = 0).
    """
    if params.alpha == 0.0:
        raise ConfigurationError("cluster requires alpha != 0")
    settings = settings or WeylSettings()
    stop_tol = stop_tol if stop_tol is not None else 1e-13 * params.B
    if stop_tol <= 0:
        raise DomainError("stop_tol must be > 0")
    above = (params.alpha < 0) == (cond is ScalarCondition.PAPER)
    if above:
        gap = gap_above(params, n)
    else:
        if n == 0:
            return []
        gap = gap_above(params, n - 1)

    records: list[EigenvalueRecord] = []
    for m in range(m_cap + 1):
        c_log = boundary_coeff(params.B, params.a, n, m)
        if c_log.sign != 0 and c_log.log_abs < -745.0:
            break
        rec = solve_mode(params, m, gap, cond, settings)
        if rec is not None:
            shift = rec.E - landau_level(params.B, n)
            rec = EigenvalueRecord(
                n_gap=rec.n_gap, m=m, E=rec.E, shift=shift if rec.n_gap == n else rec.shift,
                predicted_shift=predicted_shift(params, n, m),
                multiplicity=rec.multiplicity, condition=cond,
                iterations=rec.iterations, residual=rec.residual, n_used=rec.n_used,
            )
            records.append(rec)
            if abs(rec.shift) < stop_tol:
                break
    records.sort(key=lambda r: (-abs(r.shift), r.m))
    return records


def predicted_shift(params: Params, n: int, m: int) -> float:
    """Leading asymptotic shift -c_{n,m}/alpha (0 if the coefficient underflows)."""
    if params.alpha == 0.0:
        raise ConfigurationError("predicted_shift requires alpha != 0")
    c_log = boundary_coeff(params.B, params.a, n, m)
    if c_log.sign == 0:
        return 0.0
    log_mag = c_log.log_abs - math.log(abs(params.alpha))
    if log_mag < -745.0:
        return 0.0
    return -math.copysign(math.exp(log_mag), params.alpha)


def special_radii(B: float, n: int, m: int) -> list[float]:
    """Wall radii at which psi_{n,m} vanishes on the wall: a = sqrt(2 x / B)
    over the positive zeros x of L_n^{(|m|)}."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return []
    return [math.sqrt(2.0 * x / B) for x in laguerre_zeros(n, abs(m))]


def embedded_kernel_dim(
    B: float, a: float, n: int, tol: float = 1e-9, m_scan: int = 200
) -> int:
    """Dimension bound count for the eigenspace embedded at Lambda_n.

    Counts m in [0, m_scan] where the scaled Laguerre value at the wall
    vanishes to tol, weighting m = 0 once and m >= 1 twice; the total never
    exceeds 2n, and n = 0 contributes nothing.
    """
    if tol <= 0:
        raise DomainError("tol must be > 0")
    if n == 0:
        return 0
    x = 0.5 * B * a * a
    dim = 0
    for m in range(m_scan + 1):
        ratio, _ = laguerre_scaled(n, m, x)
        if abs(ratio) < tol:
            dim += 1 if m == 0 else 2
    if dim > 2 * n:
        raise ConfigurationError(
            f"embedded dimension {dim} exceeds bound {2 * n}; tol too loose"
        )
    return dim


def below_lowest(
    params: Params,
    cond: ScalarCondition = ScalarCondition.PAPER,
    settings: WeylSettings | None = None,
    m_cap: int = 30,
) -> list[EigenvalueRecord]:
    """All roots of the scalar condition below Lambda_0, per mode m = 0..m_cap."""
    if params.alpha == 0.0:
        raise ConfigurationError("below_lowest requires alpha != 0")
    settings = settings or WeylSettings()
    gap = gap_below_lowest(params)
    out = []
    for m in range(m_cap + 1):
        rec = solve_mode(params, m, gap, cond, settings)
        if rec is not None:
            out.append(rec)
    return out


def bound_state_radial(
    params: Params,
    m: int,
    E: float,
    r: float,
    settings: WeylSettings | None = None,
) -> float:
    """Unnormalized bound-state radial profile at radius r.

    w(r) = sum_n R_{n,m}(r) R_{n,m}(a) 2 pi a / (Lambda_n - E), evaluated
    through the off-diagonal generating-function representation; w(a) equals
    mu_{m,B}(E) and the derivative jump across the wall is exactly -1.
    """
    from .weyl import _landau_sum  # shared accelerated evaluator

    if r < 0:
        raise DomainError("radius must be >= 0")
    settings = settings or WeylSettings()
    x_r = 0.5 * params.B * r * r
    x_a = params.x
    ev = _landau_sum(params, m, E, 1, frozenset(), x_r, x_a, settings)
    pref = params.a * params.B * math.exp(-0.5 * (x_r + x_a))
    return pref * ev.value


def bound_state_profile(
    params: Params,
    m: int,
    E: float,
    r_grid,
    settings: WeylSettings | None = None,
    normalize: bool = True,
):
    """Profile on a radius grid, optionally L2-normalized (2D measure 2 pi r dr)."""
    import numpy as np

    r_grid = np.asarray(r_grid, dtype=float)
    vals = np.array([bound_state_radial(params, m, E, r, settings) for r in r_grid])
    if normalize:
        norm_sq = np.trapezoid(2.0 * math.pi * r_grid * vals * vals, r_grid)
        if norm_sq > 0:
            vals = vals / math.sqrt(norm_sq)
    return vals

"""Figure data generation: CSV files first, vector renderings alongside.

Three named figures are produced.  Every quantitative statement lives in the
CSV files; the SVG renderings are a convenience view of the same data.

  * eig-gap: per-coupling eigenvalue ladders in the first spectral gap.
  * free-vs-wall: a free Landau radial profile against the wall-localized
    bound state at strong attractive coupling.
  * resonance: radial probability profiles of two neighboring modes around
    a wall radius that is resonant with one of them.
"""

from __future__ import annotations

import math
import os

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .errors import ConfigurationError
from .landau import Params, eigenfunction_radial, peak_radius, radial_probability
from .spectrum import (
    ScalarCondition,
    bound_state_profile,
    cluster,
    gap_below_lowest,
    solve_mode,
)
from .weyl import WeylSettings

__all__ = ["FIGURE_NAMES", "render_figure"]

FIGURE_NAMES = ("eig-gap", "free-vs-wall", "resonance")

_EIG_GAP_ALPHAS = (-0.5, -1.0, -1.5)


def render_figure(name: str, out_dir: str, fmt_value,
                  condition: ScalarCondition = ScalarCondition.PAPER,
                  settings: WeylSettings | None = None) -> list[str]:
    """Write the named figure's CSV files and SVG rendering into out_dir.

    fmt_value is the scalar-to-text formatter shared with the rest of the
    CLI so CSV round-tripping stays byte-stable.  Returns written paths.
    """
    settings = settings or WeylSettings()
    if name == "eig-gap":
        return _fig_eig_gap(out_dir, fmt_value, condition, settings)
    if name == "free-vs-wall":
        return _fig_free_vs_wall(out_dir, fmt_value, settings)
    if name == "resonance":
        return _fig_resonance(out_dir, fmt_value)
    raise ConfigurationError(
        f"unknown figure {name!r}; choose from {', '.join(FIGURE_NAMES)}")


def _write_csv(path: str, header: list[str], rows, fmt_value) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt_value(v) for v in row) + "\n")


def _fig_eig_gap(out_dir: str, fmt_value, condition, settings) -> list[str]:
    """Eigenvalues in the gap (1, 3) at B=1, a=1.1 for three couplings."""
    written = []
    by_alpha = {}
    for alpha in _EIG_GAP_ALPHAS:
        params = Params(1.0, 1.1, alpha)
        recs = cluster(params, 0, condition, settings)
        recs = sorted(recs, key=lambda r: r.m)
        by_alpha[alpha] = recs
        path = os.path.join(out_dir, f"eig-gap-alpha{alpha:+.1f}.csv")
        _write_csv(path, ["m", "E", "n_used"],
                   [(r.m, r.E, r.n_used) for r in recs], fmt_value)
        written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    for alpha, recs in by_alpha.items():
        ax.plot([r.m for r in recs], [r.E for r in recs], "o-",
                label=f"alpha = {alpha:+.1f}", markersize=4)
    for level in (1.0, 3.0):
        ax.axhline(level, color="0.6", linewidth=0.8, linestyle="--")
    ax.set_xlabel("mode m")
    ax.set_ylabel("E")
    ax.set_title("Eigenvalues in the first gap (B=1, a=1.1)")
    ax.legend()
    fig.tight_layout()
    svg = os.path.join(out_dir, "eig-gap.svg")
    fig.savefig(svg)
    plt.close(fig)
    written.append(svg)
    return written


def _fig_free_vs_wall(out_dir: str, fmt_value, settings) -> list[str]:
    """Free Landau profile vs the wall bound state at B=1, a=sqrt(3), m=1."""
    B, m = 1.0, 1
    a = math.sqrt(3.0)
    params = Params(B, a, -3.0)
    r = np.linspace(0.0, 8.0, 1601)

    free = np.array([eigenfunction_radial(B, 0, m, ri) for ri in r])

    rec = solve_mode(params, m, gap_below_lowest(params),
                     ScalarCondition.BIRMAN_SCHWINGER, settings)
    if rec is None:
        raise ConfigurationError("wall bound state not found below the lowest level")
    wall = bound_state_profile(params, m, rec.E, r, settings)

    written = []
    for tag, vals in (("free", free), ("wall", wall)):
        path = os.path.join(out_dir, f"free-vs-wall-{tag}.csv")
        _write_csv(path, ["r", "value"], zip(r, vals), fmt_value)
        written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(r, free, label="free (alpha = 0)")
    ax.plot(r, wall, label="wall (alpha = -3)")
    ax.axvline(a, color="0.6", linewidth=0.8, linestyle="--")
    ax.set_xlabel("r")
    ax.set_ylabel("radial profile")
    ax.set_title("Free vs wall state (B=1, a=sqrt(3), m=1)")
    ax.legend()
    fig.tight_layout()
    svg = os.path.join(out_dir, "free-vs-wall.svg")
    fig.savefig(svg)
    plt.close(fig)
    written.append(svg)
    return written


def _fig_resonance(out_dir: str, fmt_value) -> list[str]:
    """Radial probability of (n=0, m=3) and (n=0, m=4) at B=1, a=3."""
    B, a, n = 1.0, 3.0, 0
    r = np.linspace(0.0, 9.0, 1801)
    written = []
    peaks = []
    curves = {}
    for m in (3, 4):
        rp = peak_radius(B, n, m)
        peak_val = radial_probability(B, n, m, rp)
        vals = np.array([radial_probability(B, n, m, ri) for ri in r]) / peak_val
        curves[m] = vals
        peaks.append((m, rp, peak_val))
        path = os.path.join(out_dir, f"resonance-m{m}.csv")
        _write_csv(path, ["r", "value"], zip(r, vals), fmt_value)
        written.append(path)
    peaks_path = os.path.join(out_dir, "resonance-peaks.csv")
    _write_csv(peaks_path, ["m", "peak_radius", "peak_value"], peaks, fmt_value)
    written.append(peaks_path)

    fig, ax = plt.subplots(figsize=(6, 4))
    for m, vals in curves.items():
        ax.plot(r, vals, label=f"m = {m}")
    ax.axvline(a, color="0.6", linewidth=0.8, linestyle="--", label="wall r = a")
    ax.set_xlabel("r")
    ax.set_ylabel("2 pi r |psi|^2 (unit peak)")
    ax.set_title("Boundary resonance profiles (B=1, a=3, n=0)")
    ax.legend()
    fig.tight_layout()
    svg = os.path.join(out_dir, "resonance.svg")
    fig.savefig(svg)
    plt.close(fig)
    written.append(svg)
    return written

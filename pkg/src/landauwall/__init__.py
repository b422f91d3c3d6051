"""Spectral toolkit for the 2D Landau Hamiltonian with a penetrable circular wall.

Modules:
  specfun  - log-domain special functions (Laguerre, Bessel I, gamma).
  landau   - Landau levels, eigenfunctions, boundary coefficients.
  weyl     - diagonal Weyl coefficients mu_{m,B}(z) and derived quantities.
  spectrum - per-mode eigenvalues in gaps, clusters, shifts, special radii.
  oracle   - independent finite-difference cross-check solver.
  figures  - figure data (CSV) plus vector renderings.
  cli      - argparse command line front end.
"""

from .errors import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
    LandauWallError,
    PoleError,
)
from .landau import (
    Params,
    boundary_coeff,
    boundary_coeff_asymptotic,
    cyclotron_radius,
    eigenfunction_radial,
    landau_level,
    norm_const_sq,
    peak_radius,
    radial_probability,
    resonance_index,
)
from .oracle import (
    ChannelAuditRow,
    ChannelMatrix,
    OracleGrid,
    SmallBTrack,
    build_channel,
    channel_audit,
    channel_eigenvalues,
    eigenvalues_below,
    make_grid,
    richardson_eigenvalues,
    small_b_track,
)
from .spectrum import (
    EigenvalueRecord,
    Gap,
    ScalarCondition,
    below_lowest,
    bound_state_profile,
    bound_state_radial,
    cluster,
    embedded_kernel_dim,
    gap_above,
    gap_below_lowest,
    predicted_shift,
    solve_mode,
    special_radii,
)
from .weyl import (
    PoleResidueCheck,
    WeylEval,
    WeylSettings,
    h_remainder,
    mu,
    mu_derivative,
    pole_residue,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError", "ConvergenceError", "DomainError",
    "LandauWallError", "PoleError",
    "Params", "boundary_coeff", "boundary_coeff_asymptotic",
    "cyclotron_radius", "eigenfunction_radial", "landau_level",
    "norm_const_sq", "peak_radius", "radial_probability", "resonance_index",
    "ChannelAuditRow", "ChannelMatrix", "OracleGrid", "SmallBTrack",
    "build_channel", "channel_audit", "channel_eigenvalues",
    "eigenvalues_below", "make_grid", "richardson_eigenvalues",
    "small_b_track",
    "EigenvalueRecord", "Gap", "ScalarCondition", "below_lowest",
    "bound_state_profile", "bound_state_radial", "cluster",
    "embedded_kernel_dim", "gap_above", "gap_below_lowest",
    "predicted_shift", "solve_mode", "special_radii",
    "PoleResidueCheck", "WeylEval", "WeylSettings", "h_remainder",
    "mu", "mu_derivative", "pole_residue",
    "__version__",
]

"""Eigenvalue analysis of the periodic stability operator on Delaunay nodoids.

The library computes the first eigenvalue of L0 = -d^2/dt^2 - V(t) on one
period of a nodoid profile by two independent routes (an ODE shooting method
and a Fourier Rayleigh-Ritz method), checks the lambda0 = m - 1 law, and
locates the first bifurcation point at mass -3 / neck radius 1/2.
"""

from .bifurcation import (
    ScanRow,
    bifurcation_point,
    lambda0,
    mean_potential_bound,
    preliminary_crossing,
    scan,
    shifted_first_eigenvalue,
)
from .elliptic import EllipticTriple, complete_K, incomplete_F, jacobi_triple
from .errors import BracketError, NodoidError, QuadratureError
from .geometry import (
    NodoidParams,
    axial_position,
    from_mass,
    height,
    height_deriv,
    mass_from_neck,
    potential,
    surface_point,
)
from .quadrature import adaptive_simpson
from .ritz import (
    RitzSpectrum,
    basis_eval,
    galerkin_matrix,
    potential_matrix,
    spectrum_estimate,
    stiffness_entry,
    symmetric_eigenvalues,
    symmetric_subspace_estimate,
)
from .shooting import (
    ShootingResult,
    closing_residual,
    first_eigenvalue,
    integrate_eigen_ode,
    known_eigenpair_residuals,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "EllipticTriple",
    "NodoidError",
    "NodoidParams",
    "QuadratureError",
    "RitzSpectrum",
    "ScanRow",
    "ShootingResult",
    "adaptive_simpson",
    "axial_position",
    "basis_eval",
    "bifurcation_point",
    "closing_residual",
    "complete_K",
    "first_eigenvalue",
    "from_mass",
    "galerkin_matrix",
    "height",
    "height_deriv",
    "incomplete_F",
    "integrate_eigen_ode",
    "jacobi_triple",
    "known_eigenpair_residuals",
    "lambda0",
    "mass_from_neck",
    "mean_potential_bound",
    "potential",
    "potential_matrix",
    "preliminary_crossing",
    "scan",
    "shifted_first_eigenvalue",
    "spectrum_estimate",
    "stiffness_entry",
    "surface_point",
    "symmetric_eigenvalues",
    "symmetric_subspace_estimate",
]

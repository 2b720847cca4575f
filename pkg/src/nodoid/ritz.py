"""Fourier Rayleigh-Ritz (Galerkin) estimates for the spectrum of L0.

On one period [a, b] the orthonormal trigonometric basis is

    B_1 = 1/sqrt(b-a),
    B_j = sqrt(2/(b-a)) cos(pi j (t-a)/(b-a))      for even j,
    B_j = sqrt(2/(b-a)) sin(pi (j-1) (t-a)/(b-a))  for odd j >= 3.

The n x n matrix alpha_jk = int -B_j B_k'' - int V B_j B_k has a closed-form
stiffness part and a quadrature potential part; its eigenvalues decrease
monotonically to the true eigenvalues of L0 as n grows, so every estimate
is an upper bound.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureError
from .geometry import NodoidParams, potential
from .quadrature import adaptive_simpson

__all__ = [
    "RitzSpectrum",
    "basis_eval",
    "stiffness_entry",
    "potential_matrix",
    "galerkin_matrix",
    "symmetric_eigenvalues",
    "spectrum_estimate",
    "symmetric_subspace_estimate",
]


@dataclass(frozen=True, eq=False)
class RitzSpectrum:
    """Ascending Galerkin eigenvalue estimates for one basis size."""

    n: int
    m: float
    eigenvalues: np.ndarray
    quad_tol: float


def basis_eval(j: int, t: float, a: float, b: float) -> float:
    """Value of the j-th orthonormal basis element (j >= 1) at ``t``."""
    if j < 1:
        raise ValueError(f"basis index must be >= 1, got {j}")
    length = b - a
    if j == 1:
        return 1.0 / math.sqrt(length)
    amp = math.sqrt(2.0 / length)
    if j % 2 == 0:
        return amp * math.cos(math.pi * j * (t - a) / length)
    return amp * math.sin(math.pi * (j - 1) * (t - a) / length)


def stiffness_entry(j: int, k: int, a: float, b: float) -> float:
    """Closed-form integral of -B_j B_k'': delta_jk * floor(j/2)^2 * 4 pi^2/(b-a)^2."""
    if j < 1 or k < 1:
        raise ValueError("basis indices must be >= 1")
    if j != k:
        return 0.0
    half = j // 2
    return half * half * 4.0 * math.pi**2 / (b - a) ** 2


def _parity_class(j: int) -> int:
    """Symmetry class of B_j under reflection about a and about (3a+b)/4.

    Classes: 0 = (even, even) for j = 1 and j % 4 == 0, 1 = (even, odd) for
    j % 4 == 2, 2 = (odd, even) for j % 4 == 3, 3 = (odd, odd) for the
    remaining odd indices.  V is even about both points, so the potential
    integral vanishes whenever j and k fall in different classes.
    """
    if j == 1 or j % 4 == 0:
        return 0
    if j % 4 == 2:
        return 1
    if j % 4 == 3:
        return 2
    return 3


def _entry_min_depth(j: int, k: int) -> int:
    """Subdivision depth needed before the Simpson error estimate is trusted.

    B_j B_k oscillates with up to floor(j/2) + floor(k/2) full waves over
    the period and its values repeat on the coarse dyadic grids (zeros of
    the sines land exactly on the first subdivision points), which silences
    the error estimator; demand more than one panel per wave.
    """
    waves = j // 2 + k // 2
    return max(5, waves.bit_length() + 1)


def potential_matrix(p: NodoidParams, n: int, quad_tol: float = 1e-10) -> np.ndarray:
    """Matrix of int_a^b V B_j B_k dt, j, k = 1..n.

    Entries whose integrand is odd under one of V's reflection symmetries
    are set to exactly zero without quadrature; the rest use adaptive
    Simpson with a shared cache of V evaluations (the dyadic subdivision
    points repeat across entries).
    """
    if n < 1:
        raise ValueError("basis size must be >= 1")
    vcache: dict[float, float] = {}

    def v_at(t: float) -> float:
        val = vcache.get(t)
        if val is None:
            val = potential(p, t)
            vcache[t] = val
        return val

    a, b = p.a, p.b
    out = np.zeros((n, n))
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            if _parity_class(j) != _parity_class(k):
                continue
            try:
                val = adaptive_simpson(
                    lambda t: v_at(t) * basis_eval(j, t, a, b) * basis_eval(k, t, a, b),
                    a,
                    b,
                    tol=quad_tol,
                    min_depth=_entry_min_depth(j, k),
                )
            except QuadratureError as exc:
                raise QuadratureError(
                    f"potential matrix entry ({j}, {k}) did not converge: {exc}"
                ) from exc
            out[j - 1, k - 1] = val
            out[k - 1, j - 1] = val
    return out


def galerkin_matrix(p: NodoidParams, n: int, quad_tol: float = 1e-10) -> np.ndarray:
    """alpha = stiffness - potential matrix; exactly symmetric by construction."""
    mat = -potential_matrix(p, n, quad_tol)
    for j in range(1, n + 1):
        mat[j - 1, j - 1] += stiffness_entry(j, j, p.a, p.b)
    return mat


def symmetric_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 64) -> np.ndarray:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps Givens rotations over the upper triangle until the off-diagonal
    Frobenius norm drops below ``tol`` times the matrix norm.  Raises
    ValueError when the input is not symmetric to within 1e-12.
    """
    mat = np.array(matrix, dtype=float, copy=True)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    scale = max(1.0, float(np.abs(mat).max()) if mat.size else 1.0)
    asym = float(np.abs(mat - mat.T).max()) if mat.size else 0.0
    if asym > 1e-12 * scale:
        raise ValueError(f"matrix is not symmetric (max asymmetry {asym:.3e})")
    mat = 0.5 * (mat + mat.T)
    n = mat.shape[0]
    norm = float(np.linalg.norm(mat))
    if norm == 0.0 or n == 1:
        return np.sort(np.diag(mat))
    # Rotations below this size cannot move the off-diagonal norm past the
    # convergence target, and annihilating subnormal entries would overflow
    # the rotation angle; skip them.
    skip = 0.01 * tol * norm / n
    offmask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(mat[offmask] ** 2)))
        if off <= tol * norm:
            return np.sort(np.diag(mat))
        for pidx in range(n - 1):
            for q in range(pidx + 1, n):
                apq = mat[pidx, q]
                if abs(apq) <= skip:
                    continue
                theta = 0.5 * (mat[q, q] - mat[pidx, pidx]) / apq
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = mat[:, pidx].copy()
                col_q = mat[:, q].copy()
                mat[:, pidx] = c * col_p - s * col_q
                mat[:, q] = s * col_p + c * col_q
                row_p = mat[pidx, :].copy()
                row_q = mat[q, :].copy()
                mat[pidx, :] = c * row_p - s * row_q
                mat[q, :] = s * row_p + c * row_q
    raise ArithmeticError(f"Jacobi rotations failed to converge in {max_sweeps} sweeps")


def spectrum_estimate(p: NodoidParams, n: int, quad_tol: float = 1e-10) -> RitzSpectrum:
    """Ascending eigenvalue estimates from the n x n Galerkin matrix."""
    eigs = symmetric_eigenvalues(galerkin_matrix(p, n, quad_tol))
    return RitzSpectrum(n=n, m=p.m, eigenvalues=eigs, quad_tol=quad_tol)


def symmetric_subspace_estimate(p: NodoidParams, k_max: int, quad_tol: float = 1e-10) -> float:
    """Upper bound for the first eigenvalue from the fully symmetric subspace.

    The first eigenfunction shares all five reflection symmetries of V, so
    it expands over {B_1, B_4, B_8, ...} alone; restricting the Galerkin
    matrix to those indices reaches a given accuracy with a much smaller
    matrix.  k_max = 0 reduces to the mean-potential upper bound.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    idx = [1] + [4 * k for k in range(1, k_max + 1)]
    a, b = p.a, p.b
    vcache: dict[float, float] = {}

    def v_at(t: float) -> float:
        val = vcache.get(t)
        if val is None:
            val = potential(p, t)
            vcache[t] = val
        return val

    size = len(idx)
    mat = np.zeros((size, size))
    for r, j in enumerate(idx):
        for c, k in enumerate(idx[r:], start=r):
            val = -adaptive_simpson(
                lambda t: v_at(t) * basis_eval(j, t, a, b) * basis_eval(k, t, a, b),
                a,
                b,
                tol=quad_tol,
                min_depth=_entry_min_depth(j, k),
            )
            if j == k:
                val += stiffness_entry(j, j, a, b)
            mat[r, c] = val
            mat[c, r] = val
    return float(symmetric_eigenvalues(mat)[0])

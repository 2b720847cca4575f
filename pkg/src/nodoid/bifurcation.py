"""Eigenvalue bounds, the lambda0(m) = m - 1 scan, and the bifurcation root.

The first eigenvalue of L0 is sandwiched by two rigorous bounds,
m - 2 <= lambda0 <= -(1/(b-a)) int V dt <= m, and the first bifurcation
point is the mass where the first eigenvalue of L2 = L0 + 4 reaches zero,
i.e. the root of lambda0(m) + 4 = 0.  All root finding is plain bisection
over brackets taken from those bounds.
"""

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BracketError
from .geometry import NodoidParams, from_mass, potential
from .quadrature import adaptive_simpson
from .ritz import spectrum_estimate
from .shooting import first_eigenvalue, known_eigenpair_residuals

__all__ = [
    "ScanRow",
    "mean_potential_bound",
    "preliminary_crossing",
    "lambda0",
    "shifted_first_eigenvalue",
    "bifurcation_point",
    "scan",
]


@dataclass(frozen=True)
class ScanRow:
    """Per-mass record of bounds, both eigenvalue estimates and diagnostics."""

    m: float
    lower: float
    upper: float
    mean_potential_bound: float
    lambda0_shoot: float | None
    lambda0_ritz: float | None
    residual_primary: float
    known_pair_residuals: tuple[float, float]


def mean_potential_bound(p: NodoidParams, quad_tol: float = 1e-10) -> float:
    """Upper bound -(1/(b-a)) int_a^b V dt from the constant trial function.

    Always lies in [m-2, m] because -m <= V <= 2-m.  V repeats with period
    (b-a)/2 and takes equal values on the coarse dyadic grid, so force a few
    subdivision levels before trusting the Simpson error estimate.
    """
    total = adaptive_simpson(
        lambda t: potential(p, t), p.a, p.b, tol=quad_tol, min_depth=4
    )
    return -total / p.period


def preliminary_crossing(tol: float = 1e-6) -> float:
    """Mass where the mean-potential bound crosses -4 (approximately -3.036).

    Bisection on [-4, -2]; the bound is increasing in m, so the crossing
    bounds the bifurcation mass from below.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    def f(m: float) -> float:
        return mean_potential_bound(from_mass(m)) + 4.0

    return _bisect_root(f, -4.0, -2.0, tol, what="mean-potential bound + 4")


def lambda0(
    m: float,
    method: str = "shoot",
    *,
    tol: float = 1e-8,
    ritz_n: int = 13,
    quad_tol: float = 1e-10,
):
    """First eigenvalue of L0 at mass ``m`` by either or both methods.

    Returns a float for ``method`` "shoot" or "ritz"; for "both" returns
    (shoot, ritz, discrepancy).
    """
    p = from_mass(m)
    if method == "shoot":
        return first_eigenvalue(p, tol=tol).lam
    if method == "ritz":
        return float(spectrum_estimate(p, ritz_n, quad_tol).eigenvalues[0])
    if method == "both":
        shoot = first_eigenvalue(p, tol=tol).lam
        ritz = float(spectrum_estimate(p, ritz_n, quad_tol).eigenvalues[0])
        return shoot, ritz, abs(shoot - ritz)
    raise ValueError(f"unknown method {method!r}; expected shoot, ritz or both")


def shifted_first_eigenvalue(m: float, j: int, **kwargs) -> float:
    """First eigenvalue of L_j = L0 + j^2 (theta Fourier mode j >= 0)."""
    if j < 0:
        raise ValueError("mode index j must be >= 0")
    base = lambda0(m, **kwargs)
    if isinstance(base, tuple):
        base = base[0]
    return base + float(j * j)


def _bisect_root(f, lo: float, hi: float, tol: float, what: str) -> float:
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketError(
            f"no sign change of {what} on [{lo}, {hi}]: "
            f"f({lo}) = {f_lo:.6e}, f({hi}) = {f_hi:.6e}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


def bifurcation_point(
    method: str = "shoot",
    tol: float = 1e-6,
    *,
    ritz_n: int = 21,
) -> tuple[float, float]:
    """Mass m* with lambda0(m*) = -4 and the corresponding neck radius.

    Bisection on [-3.1, -2.9]; if that bracket fails it widens to
    [-3.05, -2] (the interval guaranteed by the preliminary crossing and
    the rigorous bounds) before giving up.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    eig_tol = min(1e-8, tol / 10.0)

    def f(m: float) -> float:
        lam = lambda0(m, method, tol=eig_tol, ritz_n=ritz_n)
        if isinstance(lam, tuple):
            lam = lam[0]
        return lam + 4.0

    try:
        m_star = _bisect_root(f, -3.1, -2.9, tol, what="lambda0(m) + 4")
    except BracketError:
        m_star = _bisect_root(f, -3.05, -2.0, tol, what="lambda0(m) + 4")
    return m_star, from_mass(m_star).neck


def _scan_row(
    m: float,
    method: str,
    ritz_n: int,
    shoot_tol: float,
    quad_tol: float,
    residual_grid: int,
) -> ScanRow:
    p = from_mass(m)
    bound = mean_potential_bound(p, quad_tol)
    lam_shoot = None
    lam_ritz = None
    if method in ("shoot", "both"):
        lam_shoot = first_eigenvalue(p, tol=shoot_tol).lam
    if method in ("ritz", "both"):
        lam_ritz = float(spectrum_estimate(p, ritz_n, quad_tol).eigenvalues[0])
    reference = lam_shoot if lam_shoot is not None else lam_ritz
    return ScanRow(
        m=m,
        lower=m - 2.0,
        upper=m,
        mean_potential_bound=bound,
        lambda0_shoot=lam_shoot,
        lambda0_ritz=lam_ritz,
        residual_primary=abs(reference - (m - 1.0)),
        known_pair_residuals=known_eigenpair_residuals(p, grid=residual_grid),
    )


def scan(
    m_values,
    *,
    method: str = "both",
    ritz_n: int = 13,
    shoot_tol: float = 1e-8,
    quad_tol: float = 1e-10,
    residual_grid: int = 2001,
    workers: int | None = None,
) -> list[ScanRow]:
    """One ScanRow per mass, preserving input order.

    Rows whose computation fails are skipped with a RuntimeWarning; setting
    the NODOID_THREADS environment variable (or ``workers``) above 1 runs
    rows concurrently.
    """
    if method not in ("shoot", "ritz", "both"):
        raise ValueError(f"unknown method {method!r}")
    masses = [float(m) for m in m_values]
    for m in masses:
        if not m < 0.0:
            raise ValueError(f"scan masses must be negative, got {m}")
    if workers is None:
        workers = int(os.environ.get("NODOID_THREADS", "1") or "1")

    def run(m: float):
        try:
            return _scan_row(m, method, ritz_n, shoot_tol, quad_tol, residual_grid)
        except Exception as exc:  # collected, scan continues
            warnings.warn(f"scan row m = {m} failed: {exc}", RuntimeWarning, stacklevel=2)
            return None

    if workers > 1 and len(masses) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, masses))
    else:
        rows = [run(m) for m in masses]
    return [row for row in rows if row is not None]

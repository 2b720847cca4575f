"""Nodoid profile geometry as a function of the mass m < 0.

The profile curve (x(t), z(t)) of a nodoid with mean curvature 1 is taken in
a conformal parametrization, so that the mass first integral
m = 4x' - 4z^2 holds with a t-independent constant m.  All derived geometry
(height, its derivative, the stability potential V, period and domain,
neck/bulge radii) follows from m through Jacobi elliptic functions.

Domain convention: one period runs over [a, b] with a = -T/4, b = 3T/4, so
that the quarter point (3a + b)/4 -- where z^2 = -m/4 and x' = 0 -- sits at
exactly t = 0.
"""

import math
from dataclasses import dataclass

from .elliptic import complete_K, jacobi_triple
from .quadrature import adaptive_simpson

__all__ = [
    "NodoidParams",
    "from_mass",
    "height",
    "height_deriv",
    "potential",
    "axial_position",
    "surface_point",
    "mass_from_neck",
]

# The period K(k')/A diverges like -2*log(-m) as m -> 0-; reject masses in
# (-1e-6, 0) rather than return silently inaccurate geometry.
NEAR_SPHERE_LIMIT = -1e-6


@dataclass(frozen=True)
class NodoidParams:
    """Immutable derived geometry for one nodoid of mass ``m``.

    ``B`` and ``A`` are the elliptic-solution coefficients
    B = -(sqrt(1-m) - 1)/4 < 0 < A = 1/2 - B, ``c_tilde`` = -2B is the
    height at the necks, ``ksq`` = (B/A)^2 and ``kpsq`` = 1 - ksq are the
    two squared moduli, and [a, b] spans one neck-to-neck period.
    """

    m: float
    B: float
    A: float
    c_tilde: float
    ksq: float
    kpsq: float
    period: float
    a: float
    b: float
    neck: float
    bulge: float


def from_mass(m: float) -> NodoidParams:
    """Build all derived geometry for mass ``m`` < 0.

    Raises ValueError for m >= 0 and for masses in the near-sphere band
    (-1e-6, 0) where the period diverges.
    """
    if not m < 0.0:
        raise ValueError(f"nodoid mass must be negative, got {m!r}")
    if m > NEAR_SPHERE_LIMIT:
        raise ValueError(
            f"mass {m!r} is too close to the sphere limit 0; the period diverges"
        )
    root = math.sqrt(1.0 - m)
    B = -(root - 1.0) / 4.0
    A = 0.5 - B
    k = B / A
    ksq = k * k
    kpsq = 1.0 - ksq
    period = complete_K(kpsq) / A
    return NodoidParams(
        m=m,
        B=B,
        A=A,
        c_tilde=-2.0 * B,
        ksq=ksq,
        kpsq=kpsq,
        period=period,
        a=-period / 4.0,
        b=3.0 * period / 4.0,
        neck=(root - 1.0) / 2.0,
        bulge=(root + 1.0) / 2.0,
    )


def height(p: NodoidParams, t: float) -> float:
    """Profile height z(t) = c_tilde / dn(2A(t - b)) with squared modulus kpsq.

    Periodic with period ``p.period``; minimum ``p.neck`` at t in {a, b},
    maximum ``p.bulge`` at the midpoint (a + b)/2.
    """
    w = 2.0 * p.A * (t - p.b)
    return p.c_tilde / jacobi_triple(w, p.kpsq).dn


def height_deriv(p: NodoidParams, t: float) -> float:
    """Analytic z'(t) from the dn quotient rule.

    d/dt [c/dn(w)] with w = 2A(t-b) and dn' = -kpsq*sn*cn gives
    z' = 2A * c_tilde * kpsq * sn * cn / dn^2, which satisfies the first
    integral (z')^2 = z^2 - (m/4 + z^2)^2 pointwise.
    """
    w = 2.0 * p.A * (t - p.b)
    tr = jacobi_triple(w, p.kpsq)
    return 2.0 * p.A * p.c_tilde * p.kpsq * tr.sn * tr.cn / (tr.dn * tr.dn)


def potential(p: NodoidParams, t: float) -> float:
    """Stability potential V(t) = 2 z^2 + m^2 / (8 z^2).

    Equivalent to 2 - m - 2 (z'/z)^2, and bounded by -m <= V <= 2 - m.
    """
    z = height(p, t)
    zsq = z * z
    return 2.0 * zsq + p.m * p.m / (8.0 * zsq)


def axial_position(p: NodoidParams, t: float, tol: float = 1e-10) -> float:
    """Axial coordinate x(t) = integral_a^t (m/4 + z(s)^2) ds, with x(a) = 0."""
    return adaptive_simpson(
        lambda s: p.m / 4.0 + height(p, s) ** 2, p.a, t, tol=tol
    )


def surface_point(
    p: NodoidParams, t: float, theta: float
) -> tuple[float, float, float]:
    """Point (x(t), z(t) cos(theta), z(t) sin(theta)) on the surface of revolution."""
    z = height(p, t)
    return (axial_position(p, t), z * math.cos(theta), z * math.sin(theta))


def mass_from_neck(r: float) -> float:
    """Invert the neck-radius formula: m = 1 - (2r + 1)^2 for r > 0.

    Round-trips with ``from_mass(m).neck`` exactly in closed form.
    """
    if not r > 0.0:
        raise ValueError(f"neck radius must be positive, got {r!r}")
    return 1.0 - (2.0 * r + 1.0) ** 2

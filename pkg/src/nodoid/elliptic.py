"""Jacobi elliptic functions and elliptic integrals of the first kind.

Everything is parametrized by the squared modulus ``msq`` = k^2, which must
lie in [0, 1); arguments are real.  The complete integral K uses the
arithmetic-geometric mean, sn/cn/dn use the descending amplitude (Landen)
recursion seeded from the same AGM sequence, and the incomplete integral
uses Carlson's symmetric form R_F.  All routines are pure functions with no
shared state, so they are safe to call from any number of threads.
"""

import math
from dataclasses import dataclass

__all__ = ["EllipticTriple", "complete_K", "incomplete_F", "jacobi_triple"]

# AGM stops once |a_n - b_n| < 1e-15 * a_n, i.e. the Landen modulus term
# has dropped below 1e-15; that gives machine-precision K in <= 8 steps
# for any msq not pathologically close to 1.
_AGM_RTOL = 1e-15


@dataclass(frozen=True)
class EllipticTriple:
    """Values of sn, cn and dn at one real argument ``xi``.

    Satisfies sn^2 + cn^2 = 1 and dn^2 + msq*sn^2 = 1 to rounding, with
    dn in [sqrt(1 - msq), 1].
    """

    xi: float
    msq: float
    sn: float
    cn: float
    dn: float


def _check_msq(msq: float) -> None:
    if not 0.0 <= msq < 1.0:
        raise ValueError(f"squared modulus must lie in [0, 1), got {msq!r}")


def _agm_schedule(msq: float) -> tuple[list[float], list[float]]:
    """AGM sequence a_n and the Landen terms c_n = (a_{n-1} - b_{n-1})/2.

    a_0 = 1, b_0 = sqrt(1 - msq), c_0 = sqrt(msq).
    """
    a = 1.0
    b = math.sqrt(1.0 - msq)
    avals = [a]
    cvals = [math.sqrt(msq)]
    while abs(a - b) > _AGM_RTOL * a:
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        avals.append(a)
        cvals.append(c)
    return avals, cvals


def complete_K(msq: float) -> float:
    """Complete elliptic integral of the first kind, K(k) with k^2 = msq.

    Computed as pi / (2 * agm(1, sqrt(1 - msq))); relative error <= 1e-14.
    K(0) is exactly pi/2 and K is strictly increasing on [0, 1).
    """
    _check_msq(msq)
    avals, _ = _agm_schedule(msq)
    return math.pi / (2.0 * avals[-1])


def _carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson symmetric integral R_F(x, y, z) for nonnegative arguments."""
    for _ in range(80):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        mean = (x + y + z) / 3.0
        dx = (mean - x) / mean
        dy = (mean - y) / mean
        dz = (mean - z) / mean
        if max(abs(dx), abs(dy), abs(dz)) < 1.2e-3:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / math.sqrt(mean)


def incomplete_F(phi: float, msq: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi, k), k^2 = msq.

    F(phi) = integral_0^phi dpsi / sqrt(1 - msq sin^2 psi); strictly
    increasing in phi, with F(pi/2, msq) = complete_K(msq).  Arguments
    outside [-pi/2, pi/2] are handled through F(phi + n*pi) = 2nK + F(phi).
    """
    _check_msq(msq)
    turns = round(phi / math.pi)
    r = phi - math.pi * turns
    s = math.sin(r)
    c = math.cos(r)
    if s == 0.0:
        value = 0.0
    else:
        value = s * _carlson_rf(c * c, 1.0 - msq * s * s, 1.0)
    if turns:
        value += 2.0 * turns * complete_K(msq)
    return value


def jacobi_triple(xi: float, msq: float) -> EllipticTriple:
    """Evaluate (sn, cn, dn) at a real argument by the AGM/Landen descent.

    The argument is first reduced modulo the 4K period of sn and cn (dn has
    period 2K, which 4K also covers).  The amplitude phi_N = 2^N a_N xi is
    then pulled back through phi_{n-1} = (phi_n + asin(c_n/a_n sin phi_n))/2
    until phi_0 = am(xi), and dn is reconstructed from the cancellation-free
    form dn^2 = cn^2 + (1 - msq) sn^2.
    """
    _check_msq(msq)
    avals, cvals = _agm_schedule(msq)
    quarter = math.pi / (2.0 * avals[-1])
    cycles = math.floor(xi / (4.0 * quarter) + 0.5)
    x = xi - 4.0 * quarter * cycles
    n = len(avals) - 1
    phi = math.ldexp(avals[n] * x, n)
    for i in range(n, 0, -1):
        s = cvals[i] / avals[i] * math.sin(phi)
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, s))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(cn * cn + (1.0 - msq) * sn * sn)
    return EllipticTriple(xi=xi, msq=msq, sn=sn, cn=cn, dn=dn)

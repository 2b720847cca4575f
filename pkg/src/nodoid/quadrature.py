"""Adaptive Simpson quadrature with an absolute error target."""

from collections.abc import Callable

from .errors import QuadratureError

__all__ = ["adaptive_simpson"]


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 50,
    min_depth: int = 0,
) -> float:
    """Integrate ``f`` over [a, b] to absolute tolerance ``tol``.

    Classic recursive Simpson subdivision with Richardson correction.
    Swapped bounds negate the result; raises QuadratureError if any
    subinterval still fails its local tolerance at ``max_depth``.

    ``min_depth`` forces subdivision before the error estimate may accept:
    integrands whose oscillation is commensurate with the interval (e.g.
    trigonometric products on a full period) can have vanishing Simpson
    error estimates on the first dyadic levels, so callers integrating
    such functions must require enough depth to break the symmetry.
    """
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, tol, max_depth, min_depth)

    def recurse(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = f(lm)
        frm = f(rm)
        h6 = (hi - lo) / 12.0
        left = h6 * (flo + 4.0 * flm + fmid)
        right = h6 * (fmid + 4.0 * frm + fhi)
        err = (left + right - whole) / 15.0
        if depth >= min_depth and abs(err) <= tol:
            return left + right + err
        if depth >= max_depth:
            raise QuadratureError(
                f"adaptive Simpson stalled on [{lo}, {hi}] at depth {depth} "
                f"(error estimate {abs(err):.3e} > {tol:.3e})"
            )
        half = 0.5 * tol
        return recurse(lo, mid, flo, flm, fmid, left, half, depth + 1) + recurse(
            mid, hi, fmid, frm, fhi, right, half, depth + 1
        )

    fa = f(a)
    fb = f(b)
    fm = f(0.5 * (a + b))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 0)

"""Floating-point cross-checks derived only from tangency constraints.

The solvers here place circles and bisect on the requirement that they
touch.  They never use the closed-form radius laws, so agreement with the
exact module is independent evidence for those laws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .configurations import ChainConfig, Kind
from .qfield import qnum_to_float


@dataclass(frozen=True)
class OracleResult:
    value: float
    iterations: int
    # width of the final bracket, always <= the requested tolerance
    residual: float

    def to_json(self) -> dict:
        return {"value": self.value, "iterations": self.iterations, "residual": self.residual}


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float) -> OracleResult:
    """Locate the sign change of ``f`` on ``(lo, hi)`` to a bracket of width ``tol``.

    ``f(lo)`` and ``f(hi)`` must have opposite signs.  Only midpoints of the
    current bracket are evaluated.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    if not lo < hi:
        raise ValueError("empty bracket")
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return OracleResult(lo, 0, 0.0)
    if fhi == 0:
        return OracleResult(hi, 0, 0.0)
    if (flo > 0) == (fhi > 0):
        raise ValueError("f does not change sign on the bracket")
    iterations = 0
    while hi - lo > tol:
        mid = lo + (hi - lo) / 2
        if mid <= lo or mid >= hi:
            break  # bracket is down to adjacent doubles
        fmid = f(mid)
        iterations += 1
        if fmid == 0:
            return OracleResult(mid, iterations, 0.0)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return OracleResult(lo + (hi - lo) / 2, iterations, hi - lo)


def _check_common(a: float, tol: float) -> None:
    if not (a > 0 and math.isfinite(a)):
        raise ValueError(f"a must be positive and finite, got {a}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")


def _check_int(n: int, minimum: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise ValueError(f"n must be an integer >= {minimum}, got {n!r}")


def oracle_chain_radius_cb(n: int, a: float, tol: float = 1e-12) -> OracleResult:
    """Chain radius for CB(n) from the two end tangencies.

    With the outer circles centred at ``(-a, a)`` and ``(a, a)``, a radius-``b``
    circle on the baseline touching the left one has centre
    ``x = -a + 2 sqrt(ab)``; touching the right one it has ``x = a - 2 sqrt(ab)``.
    The chain spans ``2b(n - 1)`` between the first and last centres.
    """
    _check_int(n, 1)
    _check_common(a, tol)
    if not tol < a:
        raise ValueError("tol must be smaller than a")

    def closure(b: float) -> float:
        first = -a + 2 * math.sqrt(a * b)
        last = a - 2 * math.sqrt(a * b)
        return 2 * b * (n - 1) - (last - first)

    return bisect(closure, 0.0, a, tol)


def oracle_chain_radius_ca(n: int, a: float, tol: float = 1e-12) -> OracleResult:
    """Chain radius for CA(n) from the tangency of the outer circle with beta1.

    The outer circle sits at ``(0, a)``; the symmetric chain puts beta1 at
    ``(-(n - 1) b, b)``.  The squared tangency residual
    ``dx^2 + dy^2 - (a + b)^2`` vanishes trivially at ``b = 0``, so it is
    divided by ``b`` before bisecting.
    """
    _check_int(n, 2)
    _check_common(a, tol)

    def tangency(b: float) -> float:
        dx = (n - 1) * b
        dy = a - b
        return (dx * dx + dy * dy - (a + b) ** 2) / b

    hi = 8 * a / (n - 1) ** 2 + 1
    return bisect(tangency, tol * 1e-3, hi, tol)


def oracle_square_side(a: float, tol: float = 1e-12) -> OracleResult:
    """Side of the square on the baseline whose upper right corner ``(s/2, s)``
    lies on the circle centred at ``(a, a)`` with radius ``a``."""
    _check_common(a, tol)

    def on_circle(s: float) -> float:
        return (s / 2 - a) ** 2 + (s - a) ** 2 - a * a

    return bisect(on_circle, 0.0, a, tol)


def numeric_residuals(cfg: ChainConfig) -> float:
    """Largest absolute residual of the config's tangencies and identities,
    evaluated in double precision."""
    f = qnum_to_float
    a, b, d, bc, n = f(cfg.a), f(cfg.b), f(cfg.d), f(cfg.bc), cfg.n
    h = bc / 2
    circles = [(f(c.center.x), f(c.center.y), f(c.r)) for c in cfg.circles]
    outer = circles[: len(cfg.outer)]
    chain = circles[len(cfg.outer) :]
    bx, by = f(cfg.B.x), f(cfg.B.y)
    cx, cy = f(cfg.C.x), f(cfg.C.y)

    def touch(c1, c2) -> float:
        return abs(math.hypot(c1[0] - c2[0], c1[1] - c2[1]) - (c1[2] + c2[2]))

    def on(c, x, y) -> float:
        return abs(math.hypot(c[0] - x, c[1] - y) - c[2])

    res = [abs(y - r) for _, y, r in circles]
    res += [touch(c1, c2) for c1, c2 in zip(chain, chain[1:])]
    res += [touch(outer[0], chain[0]), touch(outer[-1], chain[-1])]
    res += [on(outer[0], cx, cy), on(chain[0], cx, cy)]
    res += [on(outer[-1], bx, by), on(chain[-1], bx, by)]
    res += [abs(d - by), abs(bc - math.hypot(bx - cx, by - cy))]
    res.append(abs((d - b) / b - (a - b) / (a + b)) * a)
    if cfg.kind is Kind.CB:
        res.append(touch(outer[0], outer[1]))
        res.append(abs((a - h) ** 2 + (a - d) ** 2 - a * a) / a)
        res.append(abs(n * d - bc))
        res.append(abs(2 * a - ((math.sqrt(n) + 1) ** 2 + 1) * d))
    else:
        res.append(abs(h * h + (a - d) ** 2 - a * a) / a)
        res.append(abs((n - 1) * d - bc))
        res.append(abs(2 * a - ((n - 1) ** 2 + 4) * d / 4))
    return max(res)

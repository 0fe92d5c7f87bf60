"""Shared independent oracles for the test suite.

These helpers deliberately avoid the library code paths they are used
to check: plain midpoint Riemann sums and brute-force grids only.
"""

from __future__ import annotations

import numpy as np

from arccover.chebyshev import MonotonePiecewiseLinear
from arccover.integrals import pair_factor_eval


def midpoint_riemann(fn, a: float, b: float, points: int = 10**6) -> float:
    """Composite midpoint rule with ``points`` cells, chunked for memory."""
    h = (b - a) / points
    total = 0.0
    chunk = 1 << 20
    for start in range(0, points, chunk):
        idx = np.arange(start, min(start + chunk, points), dtype=np.float64)
        total += float(fn(a + (idx + 0.5) * h).sum())
    return total * h


def shepp_factor_polyline(l: float, eps: float) -> MonotonePiecewiseLinear:
    """Lossless piecewise-linear representation of one avoidance factor on [0, eps]."""
    pts = [0.0, l, eps] if l < eps else [0.0, eps]
    vals = [pair_factor_eval(l, x) for x in pts]
    return MonotonePiecewiseLinear(np.array(pts), np.array(vals), "decreasing")


def uncovered_fraction_grid(lengths, points, grid: int = 200_000) -> float:
    """P(all of ``points`` uncovered) by brute-force grid over one arc center.

    Only valid for a single arc; used to pin single-factor values.
    """
    (l,) = lengths
    centers = (np.arange(grid) + 0.5) / grid
    ok = np.ones(grid, dtype=bool)
    for x in points:
        ok &= (x - centers) % 1.0 >= l
    return float(ok.mean())

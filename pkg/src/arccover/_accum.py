"""Compensated accumulation and quadrature-node helpers."""

from __future__ import annotations

import functools

import numpy as np


def kahan_cumsum(values) -> np.ndarray:
    """Running sums of ``values`` with Kahan compensation.

    A plain float64 cumsum loses the slowly-shrinking tail of a long
    series (the use case here is million-term length sums whose
    increments decay like 1/k); the compensated loop keeps every prefix
    accurate to a few ulps independent of length.
    """
    x = np.asarray(values, dtype=np.float64)
    out = np.empty_like(x)
    total = 0.0
    carry = 0.0
    for i in range(x.size):
        y = float(x[i]) - carry
        t = total + y
        carry = (t - total) - y
        total = t
        out[i] = total
    return out


@functools.lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1], cached per order."""
    if order < 1:
        raise ValueError(f"quadrature order must be >= 1, got {order}")
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w

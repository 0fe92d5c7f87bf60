"""Product integrals of arc-avoidance factors, growth bounds, and the covering criterion.

The central object is the factor

    f_l(t) = (1 - l - min(l, t)) / (1 - l)**2,

the probability that an arc of length ``l`` with uniform position
misses two fixed points at circular distance ``t``, normalized by the
squared single-point avoidance probability.  This module evaluates

* the closed-form integral of one factor over [0, eps],
* the product integral  I_n = integral_0^eps  prod_k f_{l_k}(t) dt
  exactly (to roundoff) by piecewise Gauss-Legendre quadrature,
* the Chebyshev-route lower bound  eps**(1-n) * prod_k integral(f_{l_k})
  and its certificate decomposition through the growth function

      g_eps(x) = (x**2/2 + eps - 2*eps*x) / (eps * (1 - x)**2),

  which satisfies g_eps(x) = integral(f_x)/eps for x < eps and
  g_eps(x) - 1 = x**2 * (1 - 2*eps) / (2*eps*(1 - x)**2) >= 0 for
  eps <= 1/2, so the certificate grows without bound whenever
  sum(l_k**2) diverges,
* Shepp's covering criterion series  sum_n n**(-2) * exp(l_1 + ... + l_n).

All reals are 64-bit floats and all log values are natural logs.
Everything is a pure function of its inputs and safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from ._accum import gauss_legendre, kahan_cumsum
from .sequences import LengthSequence, epsilon_window, generate

# Breakpoints closer than this are merged into one quadrature segment.
BREAKPOINT_MERGE_TOL = 1e-15

# Points-times-lengths evaluations are chunked to bound peak memory.
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class QuadratureResult:
    """Value and log-value of a product integral, with quadrature metadata."""

    value: float
    log_value: float
    segment_count: int
    nodes_per_segment: int


@dataclass(frozen=True)
class GrowthDerivatives:
    """Finite-difference probe of g_eps at 0: value, first and second derivative."""

    g0: float
    d1: float
    d2: float


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Decomposition bound_log = log_C + sum_{k>m} log g_eps(l_k).

    ``log_C`` collects the finitely many head factors with l_k >= eps
    (C does not depend on n); ``g_log_sum`` is a sum of nonnegative
    terms for eps < 1/2 and is therefore nondecreasing in n.
    """

    m: int
    log_C: float
    g_log_sum: float
    bound_log: float


@dataclass(frozen=True)
class DivergenceRow:
    """One checkpoint of a divergence table.

    ``log_product_integral`` is None when the checkpoint exceeds the
    quadrature cap; the lower bound is always reported.
    """

    n: int
    log_product_integral: float | None
    bound_log: float
    g_log_sum: float


@dataclass(frozen=True)
class CriterionSeries:
    """Partial sums of the covering criterion series, carried in both scales.

    ``partial_log_terms[n-1]`` is ``l_1 + ... + l_n - 2*log(n)``;
    ``log_partial_sums`` accumulates them with log-sum-exp so the series
    stays meaningful after ``partial_sums`` overflows to inf.
    """

    partial_log_terms: np.ndarray
    log_partial_sums: np.ndarray
    partial_sums: np.ndarray


# ---------------------------------------------------------------------------
# validation helpers

def _as_lengths(lengths) -> np.ndarray:
    arr = np.asarray(lengths, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("lengths must be a one-dimensional sequence")
    if arr.size:
        if not (np.all(arr > 0.0) and np.all(arr < 1.0)):
            raise ValueError("all lengths must lie strictly inside (0, 1)")
        if np.any(np.diff(arr) > 0.0):
            raise ValueError("lengths must be nonincreasing")
    return arr


def _check_window(lengths: np.ndarray, eps: float) -> float:
    eps = float(eps)
    upper = 1.0 - float(lengths[0]) if lengths.size else 1.0
    if not 0.0 < eps < upper:
        raise ValueError(f"eps must satisfy 0 < eps < 1 - l1 = {upper}; got {eps}")
    return eps


# ---------------------------------------------------------------------------
# single factors

def pair_factor_eval(l: float, t: float) -> float:
    """Evaluate f_l(t) = (1 - l - min(l, t)) / (1 - l)**2.

    Nonincreasing in t, constant for t >= l, and bounded below by
    (1 - l1 - eps)/(1 - l)**2 > 0 on [0, eps] whenever eps < 1 - l1.
    """
    l = float(l)
    t = float(t)
    if not 0.0 < l < 1.0:
        raise ValueError(f"arc length must lie in (0, 1), got {l}")
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    numerator = 1.0 - l - min(l, t)
    if numerator <= 0.0:
        raise ValueError(f"factor is nonpositive at t={t} for l={l} (t too large for this arc)")
    return numerator / (1.0 - l) ** 2


def pair_factor_integral(l: float, eps: float) -> float:
    """Exact integral of f_l over [0, eps].

    For l < eps the direct calculation gives
    (l**2/2 + eps - 2*eps*l) / (1 - l)**2; for l >= eps the factor is
    linear on the whole window and integrates to
    (eps*(1 - l) - eps**2/2) / (1 - l)**2.
    """
    l = float(l)
    eps = float(eps)
    if not 0.0 < l < 1.0:
        raise ValueError(f"arc length must lie in (0, 1), got {l}")
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    if 1.0 - l - min(l, eps) <= 0.0:
        raise ValueError(f"factor is nonpositive on [0, {eps}] for l={l}")
    denom = (1.0 - l) ** 2
    if l < eps:
        return (0.5 * l * l + eps - 2.0 * eps * l) / denom
    return (eps * (1.0 - l) - 0.5 * eps * eps) / denom


# ---------------------------------------------------------------------------
# product integral

def _breakpoints(lengths: np.ndarray, eps: float) -> np.ndarray:
    """Sorted distinct elements of {l_k : l_k < eps} + {0, eps}, merged at 1e-15."""
    inner = np.unique(lengths[lengths < eps]) if lengths.size else np.empty(0)
    pts = np.concatenate(([0.0], inner, [eps]))
    kept = [0.0]
    for p in pts[1:]:
        if p - kept[-1] > BREAKPOINT_MERGE_TOL:
            kept.append(float(p))
    if kept[-1] != eps:
        kept[-1] = eps
    return np.asarray(kept)


def product_integral(lengths, eps: float, *, nodes_per_segment: int | None = None) -> QuadratureResult:
    """Integrate prod_k f_{l_k}(t) over [0, eps] exactly up to roundoff.

    Between consecutive breakpoints the integrand is a polynomial of
    degree at most n, so Gauss-Legendre with ceil((n+1)/2) nodes per
    segment is exact.  Pointwise values are formed as exp(sum of logs)
    and segments are combined by log-sum-exp, so ``log_value`` stays
    finite and accurate even when ``value`` overflows.
    """
    lengths = _as_lengths(lengths)
    eps = _check_window(lengths, eps)
    n = int(lengths.size)
    nodes = math.ceil((n + 1) / 2) if nodes_per_segment is None else int(nodes_per_segment)
    if nodes < 1:
        raise ValueError(f"nodes_per_segment must be >= 1, got {nodes_per_segment}")
    if n == 0:
        return QuadratureResult(value=eps, log_value=math.log(eps), segment_count=1, nodes_per_segment=nodes)

    pts = _breakpoints(lengths, eps)
    lo, hi = pts[:-1], pts[1:]
    xg, wg = gauss_legendre(nodes)
    x = (0.5 * (lo + hi)[:, None] + 0.5 * (hi - lo)[:, None] * xg).ravel()
    w = (0.5 * (hi - lo)[:, None] * wg).ravel()

    # log prod_k f_k(x) = sum_k log(1 - l_k - min(l_k, x)) - 2 sum_k log(1 - l_k)
    log_denom = 2.0 * math.fsum(math.log1p(-v) for v in lengths)
    log_f = np.empty_like(x)
    step = max(1, _CHUNK_ELEMENTS // n)
    for start in range(0, x.size, step):
        xs = x[start:start + step, None]
        block = 1.0 - lengths - np.minimum(lengths, xs)
        np.log(block, out=block)
        log_f[start:start + step] = block.sum(axis=1)
    log_f -= log_denom

    log_value = float(logsumexp(log_f, b=w))
    return QuadratureResult(
        value=float(np.exp(log_value)),
        log_value=log_value,
        segment_count=len(pts) - 1,
        nodes_per_segment=nodes,
    )


# ---------------------------------------------------------------------------
# growth function and the lower-bound chain

def growth_eval(eps: float, x: float) -> float:
    """g_eps(x) = (x**2/2 + eps - 2*eps*x) / (eps * (1 - x)**2)."""
    eps = float(eps)
    x = float(x)
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if x >= 1.0:
        raise ValueError(f"x must be below 1, got {x}")
    if x < 0.0:
        raise ValueError(f"x must be nonnegative, got {x}")
    return (0.5 * x * x + eps - 2.0 * eps * x) / (eps * (1.0 - x) ** 2)


def _log_growth(eps: float, x: np.ndarray) -> np.ndarray:
    # log g via the exact identity g - 1 = x^2 (1-2 eps) / (2 eps (1-x)^2);
    # log1p keeps the terms exactly nonnegative for eps <= 1/2.
    x = np.asarray(x, dtype=np.float64)
    return np.log1p(x * x * (1.0 - 2.0 * eps) / (2.0 * eps * np.square(1.0 - x)))


def growth_derivative_probe(eps: float) -> GrowthDerivatives:
    """Check g_eps(0)=1, g_eps'(0)=0 and g_eps''(0)=(1-2*eps)/eps numerically.

    Central differences with h=1e-4 (first) and h=1e-3 (second); the
    closed form is defined for small negative x, so no one-sided
    stencils are needed.
    """
    eps = float(eps)
    if not 0.0 < eps < 0.5:
        raise ValueError(f"eps must lie in (0, 1/2), got {eps}")

    def g(x: float) -> float:
        return (0.5 * x * x + eps - 2.0 * eps * x) / (eps * (1.0 - x) ** 2)

    h1 = 1e-4
    h2 = 1e-3
    return GrowthDerivatives(
        g0=growth_eval(eps, 0.0),
        d1=(g(h1) - g(-h1)) / (2.0 * h1),
        d2=(g(h2) - 2.0 * g(0.0) + g(-h2)) / (h2 * h2),
    )


def chebyshev_lower_bound(lengths, eps: float) -> float:
    """eps**(1-n) * prod_k integral(f_{l_k}), accumulated in log space.

    By the Chebyshev-type integral inequality for commonly monotone
    positive functions this bounds the product integral from below.
    Returns eps for empty input, consistent with the empty product.
    """
    lengths = _as_lengths(lengths)
    eps = _check_window(lengths, eps)
    n = int(lengths.size)
    if n == 0:
        return eps
    log_sum = math.fsum(math.log(pair_factor_integral(v, eps)) for v in lengths)
    return math.exp((1.0 - n) * math.log(eps) + log_sum)


def shepp_lower_bound(lengths, eps: float) -> LowerBoundCertificate:
    """Certificate form of the lower bound: C * exp(sum_{k>m} log g_eps(l_k)).

    m counts the leading terms with l_k >= eps, so
    log_C = (1 - m)*log(eps) + sum_{k<=m} log integral(f_{l_k}) depends
    only on finitely many terms, and every g_log_sum increment is
    nonnegative because eps < 1/2.  bound_log equals
    log(chebyshev_lower_bound) identically.
    """
    lengths = _as_lengths(lengths)
    eps = _check_window(lengths, eps)
    if eps >= 0.5:
        raise ValueError(f"lower-bound path requires eps < 1/2 (growth coefficient must be positive); got {eps}")
    m = int(np.count_nonzero(lengths >= eps))
    log_c = (1.0 - m) * math.log(eps) + math.fsum(
        math.log(pair_factor_integral(v, eps)) for v in lengths[:m]
    )
    g_log_sum = math.fsum(_log_growth(eps, lengths[m:]).tolist()) if lengths.size > m else 0.0
    return LowerBoundCertificate(m=m, log_C=log_c, g_log_sum=g_log_sum, bound_log=log_c + g_log_sum)


def divergence_table(
    seq: LengthSequence,
    eps: float,
    checkpoints,
    *,
    quadrature_cap: int = 2000,
) -> list[DivergenceRow]:
    """Lower-bound certificates (and exact quadrature where affordable) at checkpoints.

    Quadrature costs O(n**2) points of O(n) work each, so
    ``log_product_integral`` is evaluated only for n <= quadrature_cap;
    the certificate is cheap and always reported.
    """
    checkpoints = [int(c) for c in checkpoints]
    if not checkpoints:
        raise ValueError("checkpoints must be nonempty")
    if any(c < 0 for c in checkpoints):
        raise ValueError("checkpoints must be nonnegative")
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise ValueError("checkpoints must be strictly ascending")
    epsilon_window(seq, eps)

    n_max = checkpoints[-1]
    lengths = generate(seq, n_max) if n_max >= 1 else np.empty(0)
    rows = []
    for n in checkpoints:
        head = lengths[:n]
        cert = shepp_lower_bound(head, eps)
        if n <= quadrature_cap:
            log_pi = product_integral(head, eps).log_value
        else:
            log_pi = None
        rows.append(DivergenceRow(n=n, log_product_integral=log_pi,
                                  bound_log=cert.bound_log, g_log_sum=cert.g_log_sum))
    return rows


# ---------------------------------------------------------------------------
# covering criterion series

def criterion_partial_sums(seq: LengthSequence, N: int) -> CriterionSeries:
    """Partial sums S_N of sum_n n**(-2) * exp(l_1 + ... + l_n).

    Length prefixes are accumulated with Kahan compensation and the
    series itself with log-sum-exp, so the slow sum(l_k**2)-driven
    growth is not lost to roundoff over as many as 1e6 terms.  The
    plain-scale partial sums overflow to inf where exp does; the log
    scale stays exact.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    lengths = generate(seq, N)
    prefix = kahan_cumsum(lengths)
    idx = np.arange(1, N + 1, dtype=np.float64)
    log_terms = prefix - 2.0 * np.log(idx)
    log_sums = np.logaddexp.accumulate(log_terms)
    with np.errstate(over="ignore"):
        sums = np.exp(log_sums)
    return CriterionSeries(partial_log_terms=log_terms, log_partial_sums=log_sums, partial_sums=sums)

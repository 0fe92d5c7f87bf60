"""Arc-length sequences l_1 >= l_2 >= ... in (0, 1) and their epsilon windows.

Every computation in the package is parameterized by a nonincreasing
sequence of arc lengths inside the open unit interval.  The parametric
families produce ``min(cap, raw(k))`` where ``raw`` is one of ``c``,
``c/k``, ``c/sqrt(k)`` or ``c*k**(-alpha)``.  The cap keeps the small-k
terms inside (0, 1) while changing only finitely many of them, so it
affects neither the divergence of ``sum(l_k**2)`` nor the covering
criterion series.

"Decreasing" is implemented as nonincreasing: ties are legal (constant
sequences are useful test inputs) and nothing downstream needs
strictness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

FAMILIES = ("constant", "harmonic", "inverse_sqrt", "power_decay", "explicit")


def _normalize_family(name: str) -> str:
    return name.strip().lower().replace("-", "_").replace("explicit_list", "explicit")


@dataclass(frozen=True)
class LengthSequence:
    """Deterministic generator of nonincreasing arc lengths in (0, 1).

    Parameters
    ----------
    family:
        One of ``constant``, ``harmonic`` (c/k), ``inverse_sqrt``
        (c/sqrt(k)), ``power_decay`` (c*k**(-alpha)) or ``explicit``.
        Hyphenated spellings (``inverse-sqrt``) are accepted.
    c:
        Positive scale of the parametric families.
    alpha:
        Nonnegative decay exponent (power_decay only).
    cap:
        Upper clamp in (0, 1) applied as ``l_k = min(cap, raw(k))``.
    values:
        The full list of lengths (explicit family only).
    """

    family: str
    c: float = 1.0
    alpha: float = 0.0
    cap: float = 0.99
    values: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", _normalize_family(self.family))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "explicit":
            if not self.values:
                raise ValueError("explicit family requires a nonempty values list")
            vals = tuple(float(v) for v in self.values)
            if any(not 0.0 < v < 1.0 for v in vals):
                raise ValueError("explicit values must all lie strictly inside (0, 1)")
            if any(b > a for a, b in zip(vals, vals[1:])):
                raise ValueError("explicit values must be nonincreasing")
            object.__setattr__(self, "values", vals)
            return
        if not self.c > 0.0:
            raise ValueError(f"scale c must be positive, got {self.c}")
        if not 0.0 < self.cap < 1.0:
            raise ValueError(f"cap must lie in (0, 1), got {self.cap}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")

    # Convenience constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: float, cap: float = 0.99) -> "LengthSequence":
        return cls("constant", c=c, cap=cap)

    @classmethod
    def harmonic(cls, c: float = 1.0, cap: float = 0.99) -> "LengthSequence":
        return cls("harmonic", c=c, cap=cap)

    @classmethod
    def inverse_sqrt(cls, c: float = 1.0, cap: float = 0.99) -> "LengthSequence":
        return cls("inverse_sqrt", c=c, cap=cap)

    @classmethod
    def power_decay(cls, c: float, alpha: float, cap: float = 0.99) -> "LengthSequence":
        return cls("power_decay", c=c, alpha=alpha, cap=cap)

    @classmethod
    def explicit(cls, values) -> "LengthSequence":
        return cls("explicit", values=tuple(values))


@dataclass(frozen=True)
class EpsilonWindow:
    """An admissible integration window (0, eps) with eps < 1 - l_1.

    ``bound_path_ok`` records whether eps < 1/2, the extra restriction
    required by the lower-bound chain (the quadratic growth coefficient
    must be positive there).
    """

    eps: float
    upper: float
    bound_path_ok: bool


def generate(seq: LengthSequence, n: int) -> np.ndarray:
    """First ``n`` arc lengths of ``seq`` as a float64 array.

    Pure and deterministic: calling twice yields identical arrays.  The
    explicit family returns a prefix copy and raises if fewer than ``n``
    values were supplied.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if seq.family == "explicit":
        assert seq.values is not None
        if len(seq.values) < n:
            raise ValueError(f"explicit list has {len(seq.values)} values but n={n} were requested")
        return np.array(seq.values[:n], dtype=np.float64)
    k = np.arange(1, n + 1, dtype=np.float64)
    if seq.family == "constant":
        raw = np.full(n, float(seq.c))
    elif seq.family == "harmonic":
        raw = seq.c / k
    elif seq.family == "inverse_sqrt":
        raw = seq.c / np.sqrt(k)
    else:  # power_decay
        raw = seq.c * k ** (-seq.alpha)
    return np.minimum(float(seq.cap), raw)


def epsilon_window(seq: LengthSequence, eps: float) -> EpsilonWindow:
    """Validate 0 < eps < 1 - l_1 and classify the bound path."""
    l1 = float(generate(seq, 1)[0])
    upper = 1.0 - l1
    eps = float(eps)
    if not 0.0 < eps < upper:
        raise ValueError(f"eps must satisfy 0 < eps < 1 - l1 = {upper}; got {eps}")
    return EpsilonWindow(eps=eps, upper=upper, bound_path_ok=eps < 0.5)


def threshold_index(seq: LengthSequence, eps: float, n: int) -> int:
    """Smallest m such that l_k < eps for every k in (m, n].

    By monotonicity this is the count of leading terms with l_k >= eps;
    it is 0 exactly when l_1 < eps.
    """
    epsilon_window(seq, eps)
    lengths = generate(seq, n)
    return int(np.count_nonzero(lengths >= eps))


def parse_sequence_spec(spec: str, *, base_dir: str | os.PathLike | None = None) -> LengthSequence:
    """Parse a sequence specification string ``family:param=value,...``.

    Examples: ``harmonic:c=1,cap=0.99``, ``constant:c=0.3``,
    ``power-decay:c=1,alpha=0.75,cap=0.49``, ``explicit:file=ls.txt``.
    The explicit file holds one decimal per line; commas are also
    accepted as separators.  Relative paths resolve against ``base_dir``
    when given.
    """
    spec = spec.strip()
    if not spec:
        raise ValueError("empty sequence specification")
    family, _, rest = spec.partition(":")
    family = _normalize_family(family)
    params: dict[str, str] = {}
    if rest:
        for item in rest.split(","):
            key, sep, value = item.partition("=")
            if not sep or not key.strip():
                raise ValueError(f"malformed sequence parameter {item!r}; expected key=value")
            params[key.strip()] = value.strip()

    if family == "explicit":
        path = params.pop("file", None)
        if path is None:
            raise ValueError("explicit family requires file=PATH")
        if params:
            raise ValueError(f"unknown parameters for explicit family: {sorted(params)}")
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(os.fspath(base_dir), path)
        with open(path, "r", encoding="utf-8") as fh:
            tokens = fh.read().replace(",", " ").split()
        if not tokens:
            raise ValueError(f"sequence file {path!r} contains no values")
        return LengthSequence.explicit(float(tok) for tok in tokens)

    kwargs: dict[str, float] = {}
    for key, value in params.items():
        if key not in ("c", "alpha", "cap"):
            raise ValueError(f"unknown sequence parameter {key!r}")
        try:
            kwargs[key] = float(value)
        except ValueError:
            raise ValueError(f"sequence parameter {key}={value!r} is not a number") from None
    return LengthSequence(family, **kwargs)

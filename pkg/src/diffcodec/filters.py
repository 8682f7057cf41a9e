"""Low-pass filter H, its square root h, and the wavelet symbol g.

H is 1 on [0, 1/2], 0 on [1, inf) and infinitely differentiable in between;
h = sqrt(H) and g(t) = sqrt(h(t/2)^2 - h(t)^2).  The symbols satisfy the
telescoping identity

    h(lam)^2 + sum_{j=0}^{n} g(2^-j lam)^2 = H(lam / 2^(n+1)),

which is what ties the multiscale frame to the single-filter operator.
"""

from dataclasses import dataclass, field

import numpy as np

# Below/above these offsets from the junctions the exponent is evaluated in
# closed form as exactly 1 or 0; avoids 0/0 while keeping 1e-12 continuity.
_EDGE = 1e-9

_MONOTONE_GRID = 10_000
_MONOTONE_TOL = 1e-12


def _standard_profile(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    out[x <= 0.5 + _EDGE] = 1.0
    mid = (x > 0.5 + _EDGE) & (x < 1.0 - _EDGE)
    if np.any(mid):
        xm = x[mid]
        expo = ((xm - 0.5) ** 2 * (2 * xm * xm - 2 * xm - 1)) / (xm * xm * (xm - 1) ** 2)
        out[mid] = np.exp(expo)
    return out


@dataclass(frozen=True)
class Filter:
    """A low-pass filter: callable on nonnegative reals, values in [0, 1]."""

    name: str
    profile: callable = field(repr=False)

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0):
            raise ValueError("low-pass filter argument must be nonnegative")
        vals = self.profile(arr)
        return float(vals) if np.isscalar(t) or arr.ndim == 0 else vals

    def validate(self) -> None:
        """Check the plateau values and monotonicity on a sampled grid."""
        grid = np.linspace(0.0, 1.2, _MONOTONE_GRID)
        vals = self(grid)
        if self(0.5) != 1.0 or self(1.0) != 0.0:
            raise ValueError(f"filter {self.name}: plateau values violated")
        if np.any(np.diff(vals) > _MONOTONE_TOL):
            raise ValueError(f"filter {self.name}: not nonincreasing on the grid")
        if np.any(vals < 0) or np.any(vals > 1):
            raise ValueError(f"filter {self.name}: range escapes [0, 1]")


def standard_filter() -> Filter:
    """The exponential-bump low-pass filter; the only filter that ships."""
    filt = Filter(name="standard", profile=_standard_profile)
    filt.validate()
    return filt


def wavelet_symbols(filt: Filter):
    """Return (h, g) with h = sqrt(H) and g(t) = sqrt(max(0, h(t/2)^2 - h(t)^2)).

    g vanishes outside (1/2, 2); the max(0, .) clamp only ever absorbs
    rounding noise since H is nonincreasing.
    """

    def h(t):
        return np.sqrt(filt(t))

    def g(t):
        arr = np.asarray(t, dtype=float)
        diff = filt(arr / 2.0) - filt(arr)
        val = np.sqrt(np.maximum(0.0, diff))
        return float(val) if np.isscalar(t) or arr.ndim == 0 else val

    return h, g


def partition_check(filt: Filter, lam, n: int):
    """|h(lam)^2 + sum_{j=0}^n g(2^-j lam)^2 - H(lam / 2^(n+1))|, elementwise."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 0):
        raise ValueError("lambda must be nonnegative")
    total = filt(lam)  # h(lam)^2
    for j in range(n + 1):
        t = lam / 2.0**j
        total = total + (filt(t / 2.0) - filt(t))  # g(2^-j lam)^2
    err = np.abs(total - filt(lam / 2.0 ** (n + 1)))
    return float(err) if err.ndim == 0 else err


def infinite_partition_defect(filt: Filter, lam):
    """|h(lam)^2 + sum_j g(2^-j lam)^2 - 1| with the sum truncated exactly.

    Terms with 2^-j lam <= 1/2 vanish because g is supported in (1/2, 2),
    so the truncation at that point is exact, not an approximation.
    """
    lam = np.asarray(lam, dtype=float)
    n = 0
    lam_max = float(np.max(lam)) if lam.size else 0.0
    while lam_max / 2.0**n > 0.5:
        n += 1
    total = filt(lam)
    for j in range(n + 1):
        t = lam / 2.0**j
        total = total + (filt(t / 2.0) - filt(t))
    err = np.abs(total - 1.0)
    return float(err) if err.ndim == 0 else err

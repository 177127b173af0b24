"""The quadratic map R^4 -> R^3, its circle fibers, and radial pullbacks.

The map sends y = (y1, y2, y3, y4) to

    ( y1^2 - y2^2 - y3^2 + y4^2,
      2 (y1 y2 - y3 y4),
      2 (y1 y3 + y2 y4) ),

squares lengths (|map(y)| = |y|^2), and is invariant along a circle of
preimages.  Pulling a radial function f back through the map turns it into
g(s) = f(s^2) on the 4D radius s, and the two radial Laplacians are tied
together by  (lap3 f)(map(y)) = lap4 g / (4 s^2).

Everything here is a pure function; arrays are accepted with the point
index in the last axis so sweeps stay vectorized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from ._fd import derivative, derivative_uniform

__all__ = [
    "RadialProfile",
    "ks_map",
    "primary_preimage",
    "fiber_rotate",
    "pullback_radial",
    "laplacian4_radial",
    "weighted_pullback_norm",
]


@dataclass
class RadialProfile:
    """Samples (r_i, f(r_i)) of a radial function, radii strictly increasing."""

    radii: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.radii = np.asarray(self.radii, dtype=float)
        self.values = np.asarray(self.values)
        if self.radii.ndim != 1 or self.radii.size != self.values.shape[-1]:
            raise ValueError("radii and values must be 1-d and of equal length")
        if self.radii.size and self.radii[0] < 0:
            raise ValueError("radii must be nonnegative")
        if np.any(np.diff(self.radii) <= 0):
            raise ValueError("radii must be strictly increasing")
        if not (np.all(np.isfinite(self.radii)) and np.all(np.isfinite(self.values))):
            raise ValueError("profile contains non-finite entries")

    def interpolator(self) -> CubicSpline:
        return CubicSpline(self.radii, self.values)


def ks_map(y) -> np.ndarray:
    """Image in R^3 of one or many 4D points (last axis of length 4)."""
    y = np.asarray(y, dtype=float)
    if y.shape[-1] != 4:
        raise ValueError("expected 4 components in the last axis")
    y1, y2, y3, y4 = np.moveaxis(y, -1, 0)
    x = np.stack(
        [
            y1 * y1 - y2 * y2 - y3 * y3 + y4 * y4,
            2.0 * (y1 * y2 - y3 * y4),
            2.0 * (y1 * y3 + y2 * y4),
        ],
        axis=-1,
    )
    return x


def _preimage_positive_branch(x: np.ndarray) -> np.ndarray:
    """Section valid away from the negative x1 half-axis."""
    norm = np.linalg.norm(x, axis=-1)
    a = np.sqrt(0.5 * (norm + x[..., 0]))
    y = np.zeros(x.shape[:-1] + (4,))
    y[..., 0] = a
    y[..., 1] = x[..., 1] / (2.0 * a)
    y[..., 2] = x[..., 2] / (2.0 * a)
    return y


def primary_preimage(x) -> np.ndarray:
    """One point of the preimage circle of ``x`` (zero has no fiber).

    The straightforward section (a, x2/2a, x3/2a, 0) with a^2 = (|x|+x1)/2
    loses digits once x1 + |x| is small, so near the negative x1 half-axis
    (x1 + |x| < |x|/2) the point is reflected: the swap
    (y1,y2,y3,y4) -> (y2,y1,y4,y3) flips the sign of the first component of
    the image, so a preimage of (-x1, x2, x3) can be swapped back.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 3:
        raise ValueError("expected 3 components in the last axis")
    norm = np.linalg.norm(x, axis=-1)
    if np.any(norm == 0.0):
        raise ValueError("the origin has a degenerate preimage")
    stable = x[..., 0] + norm >= 0.5 * norm
    x_flip = x.copy()
    x_flip[..., 0] = -x_flip[..., 0]
    y_pos = _preimage_positive_branch(np.where(stable[..., None], x, x_flip))
    y_swapped = np.stack(
        [y_pos[..., 1], y_pos[..., 0], y_pos[..., 3], y_pos[..., 2]], axis=-1
    )
    return np.where(stable[..., None], y_pos, y_swapped)


def fiber_rotate(y, t) -> np.ndarray:
    """Move along the preimage circle by angle ``t`` (image is unchanged)."""
    y = np.asarray(y, dtype=float)
    if y.shape[-1] != 4:
        raise ValueError("expected 4 components in the last axis")
    t = np.asarray(t, dtype=float)
    c, s = np.cos(t), np.sin(t)
    y1, y2, y3, y4 = np.moveaxis(y, -1, 0)
    return np.stack(
        [
            y1 * c - y4 * s,
            y2 * c + y3 * s,
            y3 * c - y2 * s,
            y4 * c + y1 * s,
        ],
        axis=-1,
    )


def pullback_radial(f: RadialProfile, s_grid) -> RadialProfile:
    """Profile of the pulled-back function, g(s) = f(s^2).

    ``f`` is interpolated with a cubic spline, so every s^2 must lie inside
    the sampled radius range.
    """
    s = np.asarray(s_grid, dtype=float)
    r_wanted = s * s
    lo, hi = f.radii[0], f.radii[-1]
    if np.any(r_wanted < lo - 1e-15) or np.any(r_wanted > hi * (1 + 1e-12)):
        raise ValueError(
            f"s^2 range [{r_wanted.min():g}, {r_wanted.max():g}] leaves the "
            f"sampled radius range [{lo:g}, {hi:g}]"
        )
    g = f.interpolator()(np.clip(r_wanted, lo, hi))
    return RadialProfile(s, g)


def laplacian4_radial(g: RadialProfile) -> RadialProfile:
    """Radial 4D Laplacian g'' + (3/s) g' of a sampled profile.

    Needs at least five samples.  At s = 0 the rule g''(0) * 4 is used
    (the limit for even profiles with g'(0) = 0).
    """
    s = g.radii
    if s.size < 5:
        raise ValueError("need at least 5 samples for the Laplacian stencil")
    vals = g.values
    steps = np.diff(s)
    if np.allclose(steps, steps[0], rtol=1e-10, atol=0.0):
        h = float(np.mean(steps))
        d1 = derivative_uniform(vals, h, 1)
        d2 = derivative_uniform(vals, h, 2)
    else:
        d1 = derivative(vals, s, 1)
        d2 = derivative(vals, s, 2)
    out = np.empty_like(d2)
    interior = s > 0
    out[interior] = d2[interior] + 3.0 * d1[interior] / s[interior]
    out[~interior] = 4.0 * d2[~interior]
    return RadialProfile(s, out)


def weighted_pullback_norm(phi: RadialProfile, r_max: float, n_quad: int = 4001) -> float:
    """Squared weighted norm of the pullback over the preimage of a ball.

    Computes  integral over s in [0, sqrt(r_max)] of  s^2 |phi(s^2)|^2
    with the 4D radial measure 2 pi^2 s^3 ds.  By the pullback isometry
    this equals (pi/4) * || phi ||^2 on the ball of radius r_max.
    """
    if r_max <= 0:
        raise ValueError("r_max must be positive")
    s_max = float(np.sqrt(min(r_max, phi.radii[-1])))
    s = np.linspace(0.0, s_max, n_quad)
    spline = phi.interpolator()
    vals = spline(s * s)
    integrand = 2.0 * np.pi**2 * s**5 * np.abs(vals) ** 2
    from scipy.integrate import simpson

    return float(simpson(integrand, x=s))

"""Finite-difference and cumulative-quadrature helpers.

Stencil weights come from Fornberg's recursion, so the same code serves
uniform and non-uniform node sets.  Interior stencils use five points
(fourth order on uniform grids); the first and last two rows fall back to
one-sided three-point stencils (second order).
"""

from __future__ import annotations

import numpy as np


def fd_weights(x0: float, nodes: np.ndarray, order: int) -> np.ndarray:
    """Weights of the ``order``-th derivative at ``x0`` from samples at ``nodes``.

    Fornberg's algorithm; exact for polynomials of degree < len(nodes).
    """
    nodes = np.asarray(nodes, dtype=float)
    n = nodes.size
    if order >= n:
        raise ValueError(f"need at least {order + 1} nodes for derivative order {order}")
    c = np.zeros((n, order + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    c4 = nodes[0] - x0
    for i in range(1, n):
        mn = min(i, order)
        c2 = 1.0
        c5 = c4
        c4 = nodes[i] - x0
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, order]


def derivative(values: np.ndarray, x: np.ndarray, order: int) -> np.ndarray:
    """Pointwise derivative of sampled data.

    Five-point centered stencils in the interior, three-point one-sided at
    the two points nearest each boundary.
    """
    values = np.asarray(values)
    x = np.asarray(x, dtype=float)
    n = x.size
    if n < 5:
        raise ValueError("need at least 5 samples")
    out = np.empty_like(values, dtype=np.result_type(values, float))
    for i in range(n):
        if i < 2:
            sel = slice(0, 3 + order - 1) if order > 1 else slice(0, 3)
        elif i > n - 3:
            sel = slice(n - (3 + order - 1), n) if order > 1 else slice(n - 3, n)
        else:
            sel = slice(i - 2, i + 3)
        w = fd_weights(x[i], x[sel], order)
        out[i] = w @ values[sel]
    return out


def derivative_uniform(values: np.ndarray, h: float, order: int) -> np.ndarray:
    """Same as :func:`derivative` on a uniform grid, vectorized.

    Implicit zero ghost values are *not* assumed; boundary rows are
    one-sided (second order), interior rows fourth order.
    """
    values = np.asarray(values)
    n = values.shape[0]
    if n < 5:
        raise ValueError("need at least 5 samples")
    out = np.empty_like(values, dtype=np.result_type(values, float))
    v = values
    if order == 1:
        out[2:-2] = (v[:-4] - 8 * v[1:-3] + 8 * v[3:-1] - v[4:]) / (12 * h)
        out[0] = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h)
        out[1] = (v[2] - v[0]) / (2 * h)
        out[-2] = (v[-1] - v[-3]) / (2 * h)
        out[-1] = (3 * v[-1] - 4 * v[-2] + v[-3]) / (2 * h)
    elif order == 2:
        out[2:-2] = (-v[:-4] + 16 * v[1:-3] - 30 * v[2:-2] + 16 * v[3:-1] - v[4:]) / (12 * h * h)
        out[0] = (2 * v[0] - 5 * v[1] + 4 * v[2] - v[3]) / (h * h)
        out[1] = (v[0] - 2 * v[1] + v[2]) / (h * h)
        out[-2] = (v[-3] - 2 * v[-2] + v[-1]) / (h * h)
        out[-1] = (2 * v[-1] - 5 * v[-2] + 4 * v[-3] - v[-4]) / (h * h)
    else:
        raise ValueError("order must be 1 or 2")
    return out


def cumulative_integral(values: np.ndarray, h: float) -> np.ndarray:
    """Running integral of uniformly sampled data, fourth order.

    Each step integrates a cubic through the four nearest samples
    (weights -1/24, 13/24, 13/24, -1/24 in the interior).  Returns an
    array of the same length with zero at the first node.
    """
    g = np.asarray(values, dtype=float)
    n = g.size
    if n < 4:
        raise ValueError("need at least 4 samples")
    steps = np.empty(n - 1)
    steps[1:-1] = (h / 24.0) * (-g[:-3] + 13 * g[1:-2] + 13 * g[2:-1] - g[3:])
    # end intervals: integrate the cubic through the first/last four nodes
    steps[0] = (h / 24.0) * (9 * g[0] + 19 * g[1] - 5 * g[2] + g[3])
    steps[-1] = (h / 24.0) * (g[-4] - 5 * g[-3] + 19 * g[-2] + 9 * g[-1])
    out = np.empty(n)
    out[0] = 0.0
    np.cumsum(steps, out=out[1:])
    return out

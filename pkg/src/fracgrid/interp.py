"""K-functional machinery for the (L^p, W^{1,p}) couple and the (theta,q)
interpolation norm.

Two routes to K(t,u) = inf { ||u-b||_p + t ||b||_W : b }. For p = 2 the
infimum of the quadratic relaxation has a per-frequency closed form (the
Hilbert W-norm diagonalizes), giving a two-sided oracle K2 <= K <= sqrt(2) K2.
For general p the infimum is bounded above by restricting b to scaled Gaussian
mollifications of u. Both produce KCurve objects over a fixed log t-grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Field, lp_norm
from .spectral import Multiplier, apply_multiplier, exact_gradient, frequency_weights

__all__ = [
    "KCurve",
    "default_t_grid",
    "k_functional",
    "k_curve",
    "interpolation_norm",
]

KCURVE_POINTS = 200
KCURVE_RANGE = (1e-6, 1e6)

_METHODS = ("exact_hilbert_p2", "mollifier_family")

# scale grid for the mollifier family; spans from "barely smooths the last
# octave" to "averages the whole torus"
_SIGMA_COUNT = 33
_THETA_GRID = np.linspace(0.0, 1.0, 21)


def default_t_grid() -> np.ndarray:
    lo, hi = KCURVE_RANGE
    return np.geomspace(lo, hi, KCURVE_POINTS)


@dataclass(frozen=True)
class KCurve:
    """K(t,u) sampled on a log-spaced t grid."""

    t_grid: np.ndarray
    values: np.ndarray
    method: str

    def __post_init__(self):
        t = np.asarray(self.t_grid, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if t.ndim != 1 or t.shape != v.shape or t.size < 2:
            raise ValueError("t_grid and values must be matching 1-d arrays")
        if not (np.all(t > 0.0) and np.all(np.diff(t) > 0.0)):
            raise ValueError("t_grid must be positive and strictly increasing")
        if self.method not in _METHODS:
            raise ValueError(f"unknown KCurve method {self.method!r}")
        slack = 1e-9 * max(1.0, float(v[-1]))
        if not np.all(np.isfinite(v)) or np.any(v < -slack):
            raise ValueError("K values must be finite and nonnegative")
        if np.any(np.diff(v) < -slack):
            raise ValueError("K(t) must be nondecreasing in t")
        if np.any(np.diff(v / t) > slack / t[:-1]):
            raise ValueError("K(t)/t must be nonincreasing in t")
        object.__setattr__(self, "t_grid", t)
        object.__setattr__(self, "values", v)


def _check_args(u: Field, p: float, method: str | None) -> str:
    if u.rank != "scalar":
        raise ValueError("k_functional expects a scalar field")
    if not (np.isfinite(p) and p >= 1.0):
        raise ValueError(f"p must satisfy 1 <= p < inf, got {p}")
    if method is None:
        method = "exact_hilbert_p2" if p == 2.0 else "mollifier_family"
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "exact_hilbert_p2" and p != 2.0:
        raise ValueError("exact_hilbert_p2 requires p = 2")
    return method


def _sigma_grid(grid) -> np.ndarray:
    return np.geomspace(grid.spacing / 16.0, grid.extent, _SIGMA_COUNT)


def _exact_hilbert_values(u: Field, ts: np.ndarray) -> np.ndarray:
    w, mags = frequency_weights(u)
    beta = 1.0 + mags ** 2
    tb = ts[:, None] ** 2 * beta.ravel()[None, :]
    k2 = np.sum(w.ravel()[None, :] * tb / (1.0 + tb), axis=1)
    return np.sqrt(np.maximum(k2, 0.0))


def _mollifier_values_p2(u: Field, ts: np.ndarray) -> np.ndarray:
    # per sigma only four Parseval scalars matter; the coefficient theta in
    # b = theta G_sigma u is then a scalar ternary search, vectorized over
    # every (t, sigma) pair at once
    w, mags = frequency_weights(u)
    w = w.ravel()
    beta = (1.0 + mags ** 2).ravel()
    a_tot = float(np.sum(w))
    if a_tot == 0.0:
        return np.zeros_like(ts)
    sigmas = _sigma_grid(u.grid)
    m = np.exp(-0.5 * sigmas[:, None] ** 2 * mags.ravel()[None, :] ** 2)
    b_s = m @ w
    c_s = (m * m) @ w
    d_s = (m * m) @ (beta * w)

    tcol = ts[:, None]
    slope = tcol * np.sqrt(d_s)[None, :]

    def objective(theta):
        quad = a_tot - 2.0 * b_s[None, :] * theta + c_s[None, :] * theta ** 2
        return np.sqrt(np.maximum(quad, 0.0)) + slope * theta

    # f is convex in theta and its minimum lies in [0, B/C]
    lo = np.zeros((ts.size, sigmas.size))
    hi = np.broadcast_to((b_s / c_s)[None, :], lo.shape).copy()
    for _ in range(72):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        keep_lo = objective(m1) < objective(m2)
        hi = np.where(keep_lo, m2, hi)
        lo = np.where(keep_lo, lo, m1)
    best = objective(0.5 * (lo + hi)).min(axis=1)
    caps = np.minimum(math.sqrt(a_tot), ts * math.sqrt(float(np.sum(beta * w))))
    return np.minimum(best, caps)


def _mollifier_values_lp(u: Field, p: float, ts: np.ndarray) -> np.ndarray:
    # every candidate b = theta G_sigma u contributes the line a + t c with
    # a = ||u - b||_p and c = ||b||_p + ||grad b||_p; K is their lower envelope
    norm_u = lp_norm(u, p)
    grad_u = lp_norm(exact_gradient(u), p)
    lines_a = [norm_u, 0.0]
    lines_c = [0.0, norm_u + grad_u]
    _, mags = frequency_weights(u)
    for sigma in _sigma_grid(u.grid):
        table = np.exp(-0.5 * sigma ** 2 * mags ** 2)
        b = apply_multiplier(u, Multiplier.custom(table))
        gb = exact_gradient(b)
        w_part = lp_norm(b, p) + lp_norm(gb, p)
        for theta in _THETA_GRID[1:]:
            lines_a.append(lp_norm(u - theta * b, p))
            lines_c.append(theta * w_part)
    a = np.array(lines_a)
    c = np.array(lines_c)
    return np.min(a[None, :] + ts[:, None] * c[None, :], axis=1)


def _k_values(u: Field, p: float, method: str, ts: np.ndarray) -> np.ndarray:
    if method == "exact_hilbert_p2":
        return _exact_hilbert_values(u, ts)
    if p == 2.0:
        return _mollifier_values_p2(u, ts)
    return _mollifier_values_lp(u, p, ts)


def k_functional(u: Field, t: float, p: float, method: str | None = None) -> float:
    """K(t, u) between L^p and W^{1,p} on the field's torus.

    exact_hilbert_p2 returns the closed-form quadratic relaxation K2, which
    brackets the true value as K2 <= K <= sqrt(2) K2. mollifier_family
    returns an upper bound from Gaussian-smoothed decompositions, including
    the trivial endpoints b = 0 and b = u.
    """
    method = _check_args(u, p, method)
    if not (np.isfinite(t) and t > 0.0):
        raise ValueError(f"t must be positive, got {t}")
    return float(_k_values(u, p, method, np.array([float(t)]))[0])


def k_curve(u: Field, p: float, method: str | None = None,
            t_grid: np.ndarray | None = None) -> KCurve:
    """Sample K(t,u) on a log-spaced grid (default 200 points in [1e-6,1e6])."""
    method = _check_args(u, p, method)
    ts = default_t_grid() if t_grid is None else np.asarray(t_grid, dtype=float)
    return KCurve(t_grid=ts, values=_k_values(u, p, method, ts), method=method)


def interpolation_norm(u: Field, theta: float, q: float, p: float) -> float:
    """(theta, q) real-interpolation norm built on the K-curve.

    Log-trapezoid quadrature of (t^-theta K)^q dt/t over the standard grid,
    plus the analytic tails from K ~ c t (small t) and K ~ const (large t).
    Raises if the sampled curve has not reached those asymptotic regimes.
    """
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie in (0,1), got {theta}")
    if not (np.isfinite(q) and q >= 1.0):
        raise ValueError(f"q must satisfy 1 <= q < inf, got {q}")
    curve = k_curve(u, p)
    t, v = curve.t_grid, curve.values
    scale = float(v[-1])
    if scale == 0.0:
        return 0.0
    # tail models require K flat at the top and linear at the bottom of the grid
    if abs(v[-1] - v[-17]) > 1e-2 * scale:
        raise ValueError("upper K tail has not flattened; tail integral unreliable")
    slope0, slope1 = v[0] / t[0], v[16] / t[16]
    if abs(slope0 - slope1) > 1e-2 * slope0:
        raise ValueError("lower K tail is not linear; tail integral unreliable")
    integrand = (t ** (-theta) * v) ** q
    body = float(np.trapezoid(integrand, np.log(t)))
    tail_hi = scale ** q * t[-1] ** (-theta * q) / (theta * q)
    tail_lo = slope0 ** q * t[0] ** ((1.0 - theta) * q) / ((1.0 - theta) * q)
    return float((body + tail_lo + tail_hi) ** (1.0 / q))

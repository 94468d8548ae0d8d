"""Fourier-multiplier operators on the periodic grid.

Conventions: unnormalized forward transform, 1/N^dim inverse (numpy
default), frequencies xi = k/L in cycles per unit length, symbols written
in 2 pi xi.  All symbols preserve conjugate symmetry so real fields map
to real fields; the residual imaginary part is checked and discarded.

On an even grid the mode k_j = -N/2 has no +N/2 partner, so a literal odd
symbol would push energy out of the conjugate-symmetric subspace.  Odd
symbols (gradient, reconstruction kernel) therefore switch to their real
magnitude on that hyperplane, component by component.  This keeps the
gradient/kernel symbol product identically 1 on every nonzero mode,
including Nyquist, and keeps the divergence dual to the gradient exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Field, GridSpec, Region, lp_norm

__all__ = [
    "Multiplier",
    "apply_multiplier",
    "bessel_potential",
    "bessel_norm",
    "riesz_gradient_spectral",
    "riesz_divergence_spectral",
    "ftc_kernel_apply",
    "exact_gradient",
    "frequency_weights",
]

_IMAG_RESIDUE_TOL = 1e-10


@dataclass(frozen=True)
class Multiplier:
    """A diagonal Fourier symbol. kind selects the formula, param its order."""

    kind: str
    param: float = 0.0
    # rank of input/output fields: "scalar" or "vector"
    input_rank: str = "scalar"
    output_rank: str = "scalar"
    custom_table: tuple = None

    @staticmethod
    def bessel(s: float) -> "Multiplier":
        return Multiplier("bessel", float(s))

    @staticmethod
    def inverse_bessel(s: float) -> "Multiplier":
        return Multiplier("bessel", -float(s))

    @staticmethod
    def riesz_gradient(s: float) -> "Multiplier":
        _require_order(s)
        return Multiplier("riesz_gradient", float(s), "scalar", "vector")

    @staticmethod
    def riesz_divergence(s: float) -> "Multiplier":
        _require_order(s)
        return Multiplier("riesz_divergence", float(s), "vector", "scalar")

    @staticmethod
    def ftc_kernel(s: float) -> "Multiplier":
        _require_order(s)
        return Multiplier("ftc_kernel", float(s), "vector", "scalar")

    @staticmethod
    def riesz_potential(sigma: float) -> "Multiplier":
        return Multiplier("riesz_potential", float(sigma))

    @staticmethod
    def custom(tables, input_rank="scalar", output_rank="scalar") -> "Multiplier":
        if isinstance(tables, np.ndarray):
            tables = (tables,)
        tabs = tuple(np.asarray(t, dtype=np.complex128) for t in tables)
        return Multiplier("custom", 0.0, input_rank, output_rank, tabs)

    def zero_mode_value(self, grid: GridSpec):
        tabs = _symbol_tables(self, grid)
        idx = (0,) * grid.dim
        vals = [t[idx] for t in tabs]
        return vals[0] if len(vals) == 1 else vals


def _require_order(s: float):
    if not 0.0 < s < 1.0:
        raise ValueError(f"operator order s must lie in (0,1), got {s}")


# ---------------------------------------------------------------------------
# symbol tables, cached per (grid, kind, param)

_CACHE = {}


def _freq_grids(grid: GridSpec):
    f = np.fft.fftfreq(grid.points_per_axis, d=grid.spacing)
    if grid.dim == 1:
        comps = [f]
    else:
        fx, fy = np.meshgrid(f, f, indexing="ij")
        comps = [fx, fy]
    mag2 = sum(c ** 2 for c in comps)
    return comps, np.sqrt(mag2)


def _nyquist_mask(grid: GridSpec, axis: int) -> np.ndarray:
    n = grid.points_per_axis
    idx = np.arange(n) == n // 2
    if grid.dim == 1:
        return idx
    if axis == 0:
        return np.broadcast_to(idx[:, None], (n, n))
    return np.broadcast_to(idx[None, :], (n, n))


def _odd_component_tables(grid: GridSpec, magnitude_exponent: float, extra_scale):
    """Vector of tables i * 2pi xi_j * |2pi xi|^(e) with Nyquist realification.

    extra_scale(mag) multiplies everything; the zero mode is set to 0.
    """
    comps, mag = _freq_grids(grid)
    safe = np.where(mag > 0, mag, 1.0)
    radial = (2.0 * math.pi * safe) ** magnitude_exponent * extra_scale(safe)
    tables = []
    for j, cj in enumerate(comps):
        t = 2j * math.pi * cj * radial
        nyq = _nyquist_mask(grid, j)
        t = np.where(nyq, 2.0 * math.pi * np.abs(cj) * radial, t)
        t[mag == 0] = 0.0
        tables.append(t.astype(np.complex128))
    return tables


def _build_tables(m: Multiplier, grid: GridSpec):
    kind, s = m.kind, m.param
    comps, mag = _freq_grids(grid)
    if kind == "bessel":
        t = (1.0 + 4.0 * math.pi ** 2 * mag ** 2) ** (-s / 2.0)
        return [t.astype(np.complex128)]
    if kind == "riesz_potential":
        safe = np.where(mag > 0, mag, 1.0)
        t = (2.0 * math.pi * safe) ** (-s)
        t[mag == 0] = 0.0
        return [t.astype(np.complex128)]
    if kind == "riesz_gradient":
        # component j: 2 pi i xi_j |2 pi xi|^(s-1)
        return _odd_component_tables(grid, s - 1.0, lambda mm: 1.0)
    if kind == "riesz_divergence":
        # dual to the gradient: componentwise -conj of the gradient symbol
        grad = _symbol_tables(Multiplier.riesz_gradient(s), grid)
        return [-np.conj(t) for t in grad]
    if kind == "ftc_kernel":
        # component j: -i (xi_j/|xi|) |2 pi xi|^(-s) = conj(grad_j) / |2 pi xi|
        safe = np.where(mag > 0, mag, 1.0)
        tables = []
        for j, cj in enumerate(comps):
            t = -1j * (cj / safe) * (2.0 * math.pi * safe) ** (-s)
            nyq = _nyquist_mask(grid, j)
            t = np.where(nyq, (np.abs(cj) / safe) * (2.0 * math.pi * safe) ** (-s), t)
            t[mag == 0] = 0.0
            tables.append(t.astype(np.complex128))
        return tables
    if kind == "custom":
        for t in m.custom_table:
            if t.shape != grid.shape:
                raise ValueError("custom symbol table shape does not match grid")
            if not np.all(np.isfinite(t)):
                raise ValueError("custom symbol table must be finite")
        return list(m.custom_table)
    raise ValueError(f"unknown multiplier kind {kind!r}")


def _symbol_tables(m: Multiplier, grid: GridSpec):
    if m.kind == "custom":
        return _build_tables(m, grid)
    key = (grid.dim, grid.points_per_axis, grid.extent, m.kind, m.param)
    if key not in _CACHE:
        _CACHE[key] = _build_tables(m, grid)
    return _CACHE[key]


# ---------------------------------------------------------------------------
# application


def _to_real(spec_arr: np.ndarray, scale: float) -> np.ndarray:
    out = np.fft.ifftn(spec_arr)
    re, im = out.real, out.imag
    ref = float(np.linalg.norm(re)) + 1e-300
    if float(np.linalg.norm(im)) > _IMAG_RESIDUE_TOL * max(ref, scale):
        raise RuntimeError("imaginary residue above tolerance: symbol breaks conjugate symmetry")
    return np.ascontiguousarray(re)


def apply_multiplier(u: Field, m: Multiplier) -> Field:
    """Diagonal action in frequency space; returns the real part."""
    grid = u.grid
    tables = _symbol_tables(m, grid)
    scale = float(np.linalg.norm(u.samples))
    if m.input_rank == "scalar":
        if u.rank != "scalar":
            raise ValueError(f"multiplier {m.kind} expects a scalar field")
        spec = np.fft.fftn(u.samples)
        if m.output_rank == "scalar":
            return Field.scalar(grid, _to_real(tables[0] * spec, scale))
        comps = [_to_real(t * spec, scale) for t in tables]
        return Field.vector(grid, np.stack(comps))
    # vector input contracts against one table per component
    if u.rank != "vector":
        raise ValueError(f"multiplier {m.kind} expects a vector field")
    if len(tables) != grid.dim:
        raise ValueError("component count mismatch between field and symbol")
    acc = np.zeros(grid.shape, dtype=np.complex128)
    for t, comp in zip(tables, u.samples):
        acc += t * np.fft.fftn(comp)
    return Field.scalar(grid, _to_real(acc, scale))


def bessel_potential(u: Field, s: float) -> Field:
    """Smoothing of order s: symbol (1 + 4 pi^2 |xi|^2)^(-s/2); any real s."""
    return apply_multiplier(u, Multiplier.bessel(s))


def bessel_norm(u: Field, s: float, p: float) -> float:
    """L^p norm of the order -s potential (the H^{s,p} norm of u)."""
    _require_order(s)
    return lp_norm(bessel_potential(u, -s), p, Region.full_torus())


def riesz_gradient_spectral(u: Field, s: float) -> Field:
    """Fractional gradient of order s in (0,1); annihilates the mean."""
    return apply_multiplier(u, Multiplier.riesz_gradient(s))


def riesz_divergence_spectral(psi: Field, s: float) -> Field:
    """Fractional divergence, the exact negative adjoint of the gradient."""
    return apply_multiplier(psi, Multiplier.riesz_divergence(s))


def ftc_kernel_apply(g: Field, s: float) -> Field:
    """Convolution with the reconstruction kernel; inverts the gradient off the mean."""
    return apply_multiplier(g, Multiplier.ftc_kernel(s))


def exact_gradient(u: Field) -> Field:
    """Collocation derivative, symbol 2 pi i xi_j (zero at the Nyquist column)."""
    grid = u.grid
    comps, _ = _freq_grids(grid)
    tables = []
    for j, cj in enumerate(comps):
        t = (2j * math.pi * cj).astype(np.complex128)
        t[_nyquist_mask(grid, j)] = 0.0
        tables.append(t)
    m = Multiplier("custom", 0.0, "scalar", "vector", tuple(tables))
    return apply_multiplier(u, m)


def frequency_weights(u: Field) -> tuple:
    """(|u_hat|^2 Parseval weights, |2 pi xi| table): frequency-side mass.

    The weights sum to the squared L^2 norm: h^dim/N^dim * |u_hat|^2.
    """
    grid = u.grid
    if u.rank != "scalar":
        raise ValueError("frequency_weights expects a scalar field")
    spec = np.fft.fftn(u.samples)
    w = (grid.spacing ** grid.dim / grid.node_count) * np.abs(spec) ** 2
    _, mag = _freq_grids(grid)
    return w, 2.0 * math.pi * mag

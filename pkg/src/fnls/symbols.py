"""Declarative Fourier-multiplier symbols evaluated on grid wavenumber lattices.

Conventions at the zero mode: homogeneous negative-power weights project
the mean out (multiplier 0 at xi = 0); everything else is evaluated
directly. The Nyquist mode is treated as a positive frequency.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import SingularSymbolError


def _velocity(v, d):
    v = np.atleast_1d(np.asarray(v, dtype=float))
    if v.shape != (d,):
        raise ValueError(f"velocity must have {d} components")
    return v


def _shifted_abs(grid, v):
    """|xi - v| on the lattice."""
    s = np.zeros(grid.shape)
    for kj, vj in zip(grid.k, v):
        s = s + (kj - vj) ** 2
    return np.sqrt(s)


def _dot(grid, v):
    """v . xi on the lattice."""
    s = np.zeros(grid.shape)
    for kj, vj in zip(grid.k, v):
        s = s + vj * kj
    return s


@dataclass(frozen=True)
class FractionalLaplacian:
    """Symbol |xi|^(2 sigma) of the fractional Laplacian."""

    sigma: float

    def evaluate(self, grid):
        return grid.k_squared**self.sigma


@dataclass(frozen=True)
class Bessel:
    """Inhomogeneous Sobolev weight (1 + |xi|^2)^(s/2)."""

    s: float

    def evaluate(self, grid):
        return (1.0 + grid.k_squared) ** (self.s / 2)


@dataclass(frozen=True)
class Riesz:
    """Homogeneous weight |xi|^s with the zero mode projected out."""

    s: float
    project_zero: bool = True

    def evaluate(self, grid):
        if self.s < 0 and not self.project_zero:
            raise SingularSymbolError("singular symbol at zero mode")
        k = grid.k_abs
        with np.errstate(divide="ignore"):
            m = np.where(k > 0, k**self.s, 0.0 if self.s != 0 else 1.0)
        return m


@dataclass(frozen=True)
class StrichartzWeight:
    """Derivative-loss weight |xi|^(-d(1-sigma)(1/2 - 1/r)), zero mode -> 0."""

    r: float
    d: int
    sigma: float

    @property
    def exponent(self):
        inv_r = 0.0 if np.isinf(self.r) else 1.0 / self.r
        return -self.d * (1.0 - self.sigma) * (0.5 - inv_r)

    def evaluate(self, grid):
        e = self.exponent
        if e == 0:
            return np.ones(grid.shape)
        return Riesz(e).evaluate(grid)


def smooth_step(r):
    """Smooth cutoff eta(r): 1 for r <= 1, 0 for r >= 2, C^inf in between."""
    r = np.asarray(r, dtype=float)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        up = np.where(r < 2, np.exp(-1.0 / np.maximum(2.0 - r, 1e-300)), 0.0)
        down = np.where(r > 1, np.exp(-1.0 / np.maximum(r - 1.0, 1e-300)), 0.0)
    return np.where(r <= 1, 1.0, np.where(r >= 2, 0.0, up / (up + down)))


def lp_bump(r):
    """psi(|xi|) = eta(|xi|) - eta(2|xi|); supported in 1/2 <= |xi| <= 2."""
    return smooth_step(r) - smooth_step(2 * np.asarray(r, dtype=float))


@dataclass(frozen=True)
class LpCutoff:
    """Littlewood-Paley annulus cutoff psi(xi / N) for dyadic N."""

    N: float

    def evaluate(self, grid):
        return lp_bump(grid.k_abs / self.N)


@dataclass(frozen=True)
class LinearPropagator:
    """Unimodular symbol exp(i t nu^(2 sigma) |xi|^(2 sigma))."""

    t: float
    sigma: float
    nu: float = 1.0

    def evaluate(self, grid):
        coeff = 0.0 if self.nu == 0 else self.nu ** (2 * self.sigma)
        return np.exp(1j * self.t * coeff * grid.k_squared**self.sigma)


@dataclass(frozen=True)
class ErrorSymbol:
    """Pseudo-Galilean error symbol; identically zero at sigma = 1.

    E(xi) = |xi - v|^(2 sigma) - |xi|^(2 sigma) - |v|^(2 sigma)
            + 2 sigma |v|^(2 sigma - 2) v . xi
    """

    v: tuple
    sigma: float

    def evaluate(self, grid):
        v = _velocity(self.v, grid.d)
        vmag = float(np.linalg.norm(v))
        if vmag == 0 or self.sigma == 1.0:
            return np.zeros(grid.shape)
        ts = 2 * self.sigma
        return (
            _shifted_abs(grid, v) ** ts
            - grid.k_abs**ts
            - vmag**ts
            + ts * vmag ** (ts - 2) * _dot(grid, v)
        )


@dataclass(frozen=True)
class SolitonSymbol:
    """Traveling-profile symbol p_v(xi); reduces to |xi|^(2 sigma) at v = 0.

    p_v(xi) = |xi - v|^(2 sigma) - |v|^(2 sigma)
              + 2 sigma |v|^(2 sigma - 2) v . xi
    """

    v: tuple
    sigma: float

    def evaluate(self, grid):
        v = _velocity(self.v, grid.d)
        vmag = float(np.linalg.norm(v))
        ts = 2 * self.sigma
        if vmag == 0:
            return grid.k_squared**self.sigma
        return (
            _shifted_abs(grid, v) ** ts
            - vmag**ts
            + ts * vmag ** (ts - 2) * _dot(grid, v)
        )


@dataclass(frozen=True)
class Product:
    """Pointwise product of several multiplier symbols."""

    factors: tuple = field(default_factory=tuple)

    def evaluate(self, grid):
        m = np.ones(grid.shape)
        for f in self.factors:
            m = m * f.evaluate(grid)
        return m


def evaluate_symbol(spec, grid):
    """Evaluate a symbol spec on a grid's wavenumber lattice."""
    m = spec.evaluate(grid)
    if not np.all(np.isfinite(m)):
        raise SingularSymbolError("symbol is not finite on the lattice")
    return m

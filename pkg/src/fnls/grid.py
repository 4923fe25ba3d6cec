"""Periodic computational grids and complex-valued fields on them."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import NonFiniteFieldError

#: Hard cap on the total number of grid points (overridable per grid).
DEFAULT_MAX_POINTS = 2**24


def _as_tuple(value, d, cast):
    if np.isscalar(value):
        return tuple(cast(value) for _ in range(d))
    out = tuple(cast(v) for v in value)
    if len(out) != d:
        raise ValueError(f"expected {d} per-axis values, got {len(out)}")
    return out


@dataclass(frozen=True)
class Grid:
    """Periodic box [-L_j/2, L_j/2) sampled on n_j points per axis.

    Wavenumbers are k_j = 2*pi*m/L_j with integer m in (-n_j/2, n_j/2];
    the single Nyquist mode per axis is treated as a positive frequency.
    """

    d: int
    n: tuple
    L: tuple
    max_points: int = field(default=DEFAULT_MAX_POINTS, compare=False)

    def __init__(self, d, n, L, max_points=DEFAULT_MAX_POINTS):
        if d not in (1, 2, 3):
            raise ValueError("dimension must be 1, 2 or 3")
        n = _as_tuple(n, d, int)
        L = _as_tuple(L, d, float)
        for nj in n:
            if nj < 8 or nj & (nj - 1) != 0:
                raise ValueError("each n_j must be a power of two >= 8")
        for Lj in L:
            if Lj <= 0:
                raise ValueError("extents must be positive")
        if int(np.prod(n)) > max_points:
            raise ValueError("total point count exceeds configured maximum")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "max_points", max_points)

    @property
    def shape(self):
        return self.n

    @property
    def total_points(self):
        return int(np.prod(self.n))

    @property
    def dx(self):
        """Per-axis grid spacing."""
        return tuple(Lj / nj for Lj, nj in zip(self.L, self.n))

    @property
    def cell_volume(self):
        return float(np.prod(self.dx))

    @property
    def volume(self):
        return float(np.prod(self.L))

    def axis(self, j):
        """Physical coordinates along axis j."""
        nj, Lj = self.n[j], self.L[j]
        return -Lj / 2 + (Lj / nj) * np.arange(nj)

    @cached_property
    def x(self):
        """List of d coordinate arrays broadcastable to the grid shape."""
        out = []
        for j in range(self.d):
            shape = [1] * self.d
            shape[j] = self.n[j]
            out.append(self.axis(j).reshape(shape))
        return out

    def wavenumber_axis(self, j):
        """FFT-ordered wavenumbers along axis j, Nyquist taken positive."""
        nj, Lj = self.n[j], self.L[j]
        m = np.fft.fftfreq(nj) * nj
        m[nj // 2] = nj / 2
        return 2 * np.pi * m / Lj

    @cached_property
    def k(self):
        """List of d wavenumber arrays broadcastable to the grid shape."""
        out = []
        for j in range(self.d):
            shape = [1] * self.d
            shape[j] = self.n[j]
            out.append(self.wavenumber_axis(j).reshape(shape))
        return out

    @cached_property
    def k_squared(self):
        k2 = np.zeros(self.n)
        for kj in self.k:
            k2 = k2 + kj**2
        return k2

    @cached_property
    def k_abs(self):
        return np.sqrt(self.k_squared)

    @property
    def k_min(self):
        """Smallest nonzero wavenumber magnitude, 2*pi/max(L)."""
        return 2 * np.pi / max(self.L)

    @property
    def k_nyquist(self):
        """Largest per-axis Nyquist wavenumber, pi*max(n/L)."""
        return np.pi * max(nj / Lj for nj, Lj in zip(self.n, self.L))


@dataclass
class ComplexField:
    """Complex double-precision samples of a function on a Grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.ascontiguousarray(self.values, dtype=np.complex128)
        if self.values.shape != self.grid.shape:
            raise ValueError(
                f"value shape {self.values.shape} does not match grid {self.grid.shape}"
            )
        self.check_finite()

    def check_finite(self):
        if not np.all(np.isfinite(self.values.view(np.float64))):
            raise NonFiniteFieldError("nonfinite field")
        return self

    def copy(self):
        return ComplexField(self.grid, self.values.copy())

    def boundary_amplitude(self):
        """Max |u| over the faces of the box (first sample along each axis)."""
        amp = 0.0
        for j in range(self.grid.d):
            face = np.take(np.abs(self.values), 0, axis=j)
            amp = max(amp, float(np.max(face)))
        return amp

    def __add__(self, other):
        return ComplexField(self.grid, self.values + other.values)

    def __sub__(self, other):
        return ComplexField(self.grid, self.values - other.values)

    def __mul__(self, scalar):
        return ComplexField(self.grid, self.values * scalar)

    __rmul__ = __mul__


def zeros(grid):
    return ComplexField(grid, np.zeros(grid.shape, dtype=np.complex128))

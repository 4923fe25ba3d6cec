"""Smooth initial profiles on periodic grids."""

from dataclasses import dataclass

import numpy as np

from .grid import ComplexField


@dataclass(frozen=True)
class ProfileSpec:
    """Gaussian bump amplitude * exp(-|x - center|^2 / (2 width^2))."""

    width: float = 1.0
    amplitude: float = 1.0
    center: tuple = ()

    def realize(self, grid):
        center = self.center if self.center else (0.0,) * grid.d
        if len(center) != grid.d:
            raise ValueError(f"center must have {grid.d} components")
        r2 = np.zeros(grid.shape)
        for xj, cj in zip(grid.x, center):
            r2 = r2 + (xj - cj) ** 2
        vals = self.amplitude * np.exp(-r2 / (2 * self.width**2))
        return ComplexField(grid, vals.astype(np.complex128))


def gaussian(grid, width=1.0, amplitude=1.0, center=None):
    spec = ProfileSpec(width, amplitude, tuple(center) if center else ())
    return spec.realize(grid)

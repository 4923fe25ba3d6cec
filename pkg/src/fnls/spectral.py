"""Multiplier application, projections, norms, shifts and rescaling."""

import numpy as np

from .errors import DyadicScaleError, OffLatticeError, RescaleAliasingError
from .grid import ComplexField, Grid
from .symbols import Bessel, LpCutoff, Riesz, evaluate_symbol

HOMOGENEOUS = "HOMOGENEOUS"
INHOMOGENEOUS = "INHOMOGENEOUS"


def fft(field):
    """Forward transform of the sample array (unnormalized)."""
    return np.fft.fftn(field.values)


def field_from_spectrum(grid, spectrum):
    return ComplexField(grid, np.fft.ifftn(spectrum))


def apply_multiplier(u, spec):
    """Inverse transform of (multiplier x forward transform of u)."""
    m = evaluate_symbol(spec, u.grid)
    return field_from_spectrum(u.grid, m * fft(u))


def resolvable_scales(grid):
    """Dyadic N = 2^j within the grid-resolvable range [k_min, k_nyquist]."""
    j_lo = int(np.ceil(np.log2(grid.k_min) - 1e-9))
    j_hi = int(np.floor(np.log2(grid.k_nyquist) + 1e-9))
    return [2.0**j for j in range(j_lo, j_hi + 1)]


def littlewood_paley_project(u, N):
    """Project u onto the dyadic annulus |xi| ~ N."""
    j = np.log2(N)
    if abs(j - round(j)) > 1e-12:
        raise DyadicScaleError(f"dyadic scale unresolved: N = {N} is not a power of two")
    grid = u.grid
    if not grid.k_min <= N <= grid.k_nyquist:
        raise DyadicScaleError(
            f"dyadic scale unresolved: N = {N} outside [{grid.k_min:.4g}, {grid.k_nyquist:.4g}]"
        )
    return apply_multiplier(u, LpCutoff(N))


def lebesgue_norm(u, r):
    """L^r norm by rectangle-rule quadrature; r = inf returns max |u|."""
    if r < 1:
        raise ValueError("r must be >= 1")
    a = np.abs(u.values)
    if np.isinf(r):
        return float(np.max(a))
    return float((np.sum(a**r) * u.grid.cell_volume) ** (1.0 / r))


def spectral_l2_norm(u, weights=None):
    """L^2 norm computed on the spectral side (Plancherel)."""
    uh = fft(u)
    w = 1.0 if weights is None else weights**2
    total = np.sum(w * np.abs(uh) ** 2) / u.grid.total_points
    return float(np.sqrt(total * u.grid.cell_volume))


def sobolev_norm(u, s, r=2.0, homogeneity=INHOMOGENEOUS):
    """W^(s,r) norm: spectral weight (Bessel or Riesz) then L^r quadrature."""
    if homogeneity == INHOMOGENEOUS:
        spec = Bessel(s)
    elif homogeneity == HOMOGENEOUS:
        spec = Riesz(s)
    else:
        raise ValueError(f"unknown homogeneity {homogeneity!r}")
    if s == 0:
        return lebesgue_norm(u, r)
    return lebesgue_norm(apply_multiplier(u, spec), r)


def round_velocity(grid, v):
    """Round v to the nearest lattice-commensurate vector (2 pi m / L_j)."""
    v = np.atleast_1d(np.asarray(v, dtype=float))
    return np.array(
        [2 * np.pi * round(vj * Lj / (2 * np.pi)) / Lj for vj, Lj in zip(v, grid.L)]
    )


def modulate(u, v):
    """Multiply by exp(-i v.x); v must be lattice-commensurate."""
    grid = u.grid
    v = np.atleast_1d(np.asarray(v, dtype=float))
    if v.shape != (grid.d,):
        raise ValueError(f"velocity must have {grid.d} components")
    rounded = round_velocity(grid, v)
    if np.max(np.abs(v - rounded)) > 1e-9 * max(2 * np.pi / Lj for Lj in grid.L):
        raise OffLatticeError(
            f"modulation off-lattice: v = {v.tolist()}, nearest lattice vector {rounded.tolist()}"
        )
    phase = np.zeros(grid.shape)
    for xj, vj in zip(grid.x, rounded):
        phase = phase + vj * xj
    return ComplexField(grid, u.values * np.exp(-1j * phase))


def spatial_shift(u, a):
    """Translate u by a (result(x) = u(x - a)) via a spectral phase shift."""
    grid = u.grid
    a = np.atleast_1d(np.asarray(a, dtype=float))
    if a.shape != (grid.d,):
        raise ValueError(f"shift must have {grid.d} components")
    phase = np.zeros(grid.shape)
    for kj, aj in zip(grid.k, a):
        phase = phase + kj * aj
    return field_from_spectrum(grid, np.exp(-1j * phase) * fft(u))


def _half(n):
    """Mode indices of an n-point axis in FFT order, Nyquist positive."""
    m = np.fft.fftfreq(n) * n
    m[n // 2] = n // 2
    return m.astype(int)


def rescale(u, beta, n_target=None, alias_tol=1e-12):
    """Return the field x -> u(beta x) on the box with extents L/beta.

    Spectral content moves rigidly: mode m of the source becomes mode m of
    the target (frequency k -> beta k on the wider/narrower box), so the
    operation is a spectral pad/truncate plus a box reinterpretation and is
    exact for band-limited data. Truncation that would discard more than
    alias_tol of the spectral energy raises RescaleAliasingError.
    """
    grid = u.grid
    if beta <= 0:
        raise ValueError("beta must be positive")
    if n_target is None:
        n_target = grid.n
    elif np.isscalar(n_target):
        n_target = tuple(int(n_target) for _ in range(grid.d))
    else:
        n_target = tuple(int(v) for v in n_target)
    target = Grid(grid.d, n_target, tuple(Lj / beta for Lj in grid.L))

    src = fft(u) / grid.total_points
    dst = np.zeros(target.shape, dtype=np.complex128)

    src_idx = np.ix_(*[np.argsort(_half(nj)) for nj in grid.n])
    # Modes of the source in ascending order m = -n/2+1 .. n/2.
    sorted_src = src[src_idx]
    total = np.sum(np.abs(src) ** 2)

    slices_src, slices_dst = [], []
    for ns, nt in zip(grid.n, target.n):
        ms = _half(ns)
        order = np.argsort(ms)
        ms_sorted = ms[order]
        keep = (ms_sorted > -nt // 2) & (ms_sorted <= nt // 2)
        slices_src.append(keep)
        slices_dst.append(ms_sorted[keep])
    kept = sorted_src[np.ix_(*slices_src)]
    if total > 0:
        discarded = 1.0 - np.sum(np.abs(kept) ** 2) / total
        if discarded > alias_tol:
            raise RescaleAliasingError(
                f"rescale aliasing: {discarded:.3e} of spectral energy beyond target Nyquist"
            )
    dst[np.ix_(*[np.mod(m, nt) for m, nt in zip(slices_dst, target.n)])] = kept
    return field_from_spectrum(target, dst * target.total_points)


def reconstruct_from_bands(u):
    """Sum of all resolvable LP projections plus the mean of u."""
    grid = u.grid
    uh = fft(u)
    acc = np.zeros(grid.shape, dtype=np.complex128)
    for N in resolvable_scales(grid):
        acc = acc + evaluate_symbol(LpCutoff(N), grid) * uh
    mean = np.zeros(grid.shape, dtype=np.complex128)
    mean.flat[0] = uh.flat[0]
    return field_from_spectrum(grid, acc + mean)

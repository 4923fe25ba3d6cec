"""Strang-splitting time integration of the fractional NLS.

Both substeps are exact flows: the linear propagator is a unimodular
multiplier and the zero-dispersion nonlinearity is a pointwise phase
rotation, so each step conserves mass to roundoff.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import MassDriftError, NonFiniteFieldError
from .grid import ComplexField
from .model import ModelParams
from .observables import energy, mass
from .spectral import field_from_spectrum, fft, rescale
from .symbols import LinearPropagator, evaluate_symbol


def default_dt(grid, params, t_end):
    """Resolve the Nyquist linear phase to ~0.6 rad/step, within t_end/100."""
    dx = min(grid.dx)
    dt = 0.1 * dx ** (2 * params.sigma)
    if t_end > 0:
        dt = min(dt, t_end / 100)
    return dt


def linear_propagate(u, t, sigma, nu=1.0):
    """Exact linear flow: spectrum times exp(i t nu^(2 sigma) |xi|^(2 sigma))."""
    m = evaluate_symbol(LinearPropagator(t, sigma, nu), u.grid)
    return field_from_spectrum(u.grid, m * fft(u))


def amplitude_power(a, p_minus_1):
    """|u|^(p-1) with the 0 -> 0 convention for non-integer powers."""
    with np.errstate(divide="ignore"):
        return np.where(a > 0, np.exp(p_minus_1 * np.log(np.maximum(a, 1e-300))), 0.0)


def nonlinear_phase(u, t, mu, p):
    """Exact zero-dispersion flow: u * exp(i t mu |u|^(p-1))."""
    if p <= 1:
        raise ValueError("p must exceed 1")
    a = amplitude_power(np.abs(u.values), p - 1)
    return ComplexField(u.grid, u.values * np.exp(1j * t * mu * a))


def strang_step(u, dt, params):
    """linear(dt/2) o nonlinear(dt) o linear(dt/2)."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    u = linear_propagate(u, dt / 2, params.sigma, params.nu)
    u = nonlinear_phase(u, dt, params.mu, params.p)
    return linear_propagate(u, dt / 2, params.sigma, params.nu)


@dataclass
class EvolveConfig:
    params: ModelParams
    t_end: float
    dt: float | None = None
    snapshot_stride: int = 1
    mass_drift_guard: float = 1e-8

    def __post_init__(self):
        if self.t_end < 0:
            raise ValueError("t_end must be >= 0")
        if self.dt is not None and self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.t_end > 0 and self.dt is not None and self.dt > self.t_end:
            raise ValueError("dt must not exceed t_end")
        if self.snapshot_stride < 1:
            raise ValueError("snapshot stride must be >= 1")


@dataclass
class Trajectory:
    """Time-stamped field snapshots with per-snapshot diagnostics."""

    times: list = field(default_factory=list)
    fields: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    def append(self, t, u, params):
        self.times.append(float(t))
        self.fields.append(u)
        self.diagnostics.append(
            {
                "time": float(t),
                "mass": mass(u),
                "energy": energy(u, params.sigma, params.mu, params.p),
                "linf": float(np.max(np.abs(u.values))),
                "boundary_amplitude": u.boundary_amplitude(),
            }
        )

    @property
    def final(self):
        return self.fields[-1]


def evolve(u0, cfg):
    """Integrate to cfg.t_end with Strang steps, snapshotting every stride."""
    params = cfg.params
    dt = cfg.dt if cfg.dt is not None else default_dt(u0.grid, params, cfg.t_end)
    traj = Trajectory()
    traj.append(0.0, u0, params)
    if cfg.t_end == 0:
        return traj

    mass0 = traj.diagnostics[0]["mass"]
    n_full = int(np.floor(cfg.t_end / dt + 1e-12))
    remainder = cfg.t_end - n_full * dt
    # Precompute the half-step multiplier; the remainder step gets its own.
    half = evaluate_symbol(LinearPropagator(dt / 2, params.sigma, params.nu), u0.grid)

    u = u0
    t = 0.0
    steps_done = 0
    total_steps = n_full + (1 if remainder > 1e-12 * dt else 0)
    for step in range(total_steps):
        if step < n_full:
            h, step_dt = half, dt
        else:
            step_dt = remainder
            h = evaluate_symbol(
                LinearPropagator(step_dt / 2, params.sigma, params.nu), u0.grid
            )
        w = np.fft.ifftn(h * np.fft.fftn(u.values))
        a = amplitude_power(np.abs(w), params.p - 1)
        w = w * np.exp(1j * step_dt * params.mu * a)
        w = np.fft.ifftn(h * np.fft.fftn(w))
        u = ComplexField(u.grid, w)
        t += step_dt
        steps_done += 1

        last = step == total_steps - 1
        if steps_done % cfg.snapshot_stride == 0 or last:
            if not np.all(np.isfinite(w.view(np.float64))):
                raise NonFiniteFieldError(f"nonfinite field at t = {t:.6g}")
            traj.append(t, u, params)
            drift = abs(traj.diagnostics[-1]["mass"] - mass0) / max(mass0, 1e-300)
            if drift > cfg.mass_drift_guard:
                raise MassDriftError(
                    f"mass drift guard tripped: relative drift {drift:.3e} at t = {t:.6g}"
                )
    return traj


def scaling_transform(u, lam, params):
    """Scaling symmetry: lambda^(-2 sigma/(p-1)) u(x / lambda) on the box lambda L.

    Returns (field, time_scale) with time_scale = lambda^(2 sigma): if u
    solves the equation, the returned field at time t corresponds to u at
    time t / time_scale.
    """
    j = np.log2(lam)
    if abs(j - round(j)) > 1e-12:
        raise ValueError("lambda must be a power of two")
    j = int(round(j))
    if j >= 0:
        n_target = tuple(nj * 2**j for nj in u.grid.n)
    else:
        n_target = tuple(max(nj // 2 ** (-j), 8) for nj in u.grid.n)
    scaled = rescale(u, 1.0 / lam, n_target)
    amp = lam ** (-2 * params.sigma / (params.p - 1))
    return ComplexField(scaled.grid, amp * scaled.values), lam ** (2 * params.sigma)

"""Sign changes of the total massless pressure: roots of g(xi), the
crossover hyperbola T = xi*/L, and phase-diagram / force-curve grids."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pressure import FieldKind, g_function, massless_prefactor
from .series import DEFAULT_CONTROL, NonConvergenceError, SeriesControl

HBAR_C_MEV_FM = 197.327
"""hbar*c in MeV.fm, the anchor for converting xi = LT out of natural units."""

KB_MEV_PER_K = 8.617333262e-11
"""Boltzmann constant in MeV/K."""

FM_PER_MM = 1e12


@dataclass(frozen=True)
class CrossoverResult:
    """Root xi* of g with its bracket, refinement diagnostics, and the
    products L*T expressed in MeV.fm and mm.K."""

    xi_star: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    si_mev_fm: float
    si_mm_k: float
    stable: bool

    @classmethod
    def from_root(cls, xi, bracket, residual, iterations, stable):
        mev_fm = xi * HBAR_C_MEV_FM
        mm_k = mev_fm / KB_MEV_PER_K / FM_PER_MM
        return cls(xi, bracket, residual, iterations, mev_fm, mm_k, stable)


class PhaseDiagramError(RuntimeError):
    """Series failure at a grid cell; carries the cell coordinates."""

    def __init__(self, L: float, T: float, cause: Exception):
        super().__init__(f"series failure at cell (L={L}, T={T}): {cause}")
        self.cell = (L, T)


def find_crossover(
    field_kind: FieldKind,
    theta: int,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    xi_max: float = 10.0,
    xi_tol: float = 1e-6,
) -> CrossoverResult | None:
    """Locate the root of g(xi) on (0, xi_max], or None when g keeps one
    sign there (scalar antiperiodic and fermion periodic cases).

    A coarse scan at spacing 0.1 brackets the sign change (g is smooth
    and dominated by its xi^4 term at large xi, so this cannot skip
    roots at the published locations); bisection shrinks the bracket,
    then secant steps polish to |dxi| <= xi_tol.
    """
    g = lambda x: g_function(field_kind, theta, x, ctrl)
    xs = [0.1 * k for k in range(1, int(round(xi_max * 10)) + 1)]
    g_prev, x_prev = g(xs[0]), xs[0]
    lo = hi = None
    for x in xs[1:]:
        g_here = g(x)
        if g_prev == 0.0 or g_prev * g_here < 0.0:
            lo, g_lo = x_prev, g_prev
            hi, g_hi = x, g_here
            break
        x_prev, g_prev = x, g_here
    if lo is None:
        return None

    iterations = 0
    while hi - lo > 1e-3 and iterations < 200:
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        iterations += 1
        if g_lo * g_mid <= 0.0:
            hi, g_hi = mid, g_mid
        else:
            lo, g_lo = mid, g_mid

    while hi - lo > xi_tol and iterations < 200:
        x2 = hi - g_hi * (hi - lo) / (g_hi - g_lo) if g_hi != g_lo else 0.5 * (lo + hi)
        margin = 0.1 * (hi - lo)
        if not lo + margin < x2 < hi - margin:
            x2 = 0.5 * (lo + hi)  # secant stagnating at an endpoint; bisect
        f2 = g(x2)
        iterations += 1
        if g_lo * f2 <= 0.0:
            hi, g_hi = x2, f2
        else:
            lo, g_lo = x2, f2

    root = 0.5 * (lo + hi)
    residual = abs(g(root))
    while residual > xi_tol and iterations < 220:
        g_root = g(root)
        iterations += 1
        if g_lo * g_root <= 0.0:
            hi, g_hi = root, g_root
        else:
            lo, g_lo = root, g_root
        root = 0.5 * (lo + hi)
        residual = abs(g(root))

    # Attractive above the root and repulsive below means a restoring
    # force around the equilibrium separation.
    pref = massless_prefactor(field_kind, theta)
    above = pref * g(min(root * 1.05, xi_max))
    below = pref * g(root * 0.95)
    stable = above < 0.0 < below
    return CrossoverResult.from_root(root, (lo, hi), residual, iterations, stable)


@dataclass(frozen=True)
class PhaseDiagram:
    """Massless total pressure over an (L, T) grid, row-major in L."""

    field_kind: FieldKind
    theta: int
    L_grid: np.ndarray
    T_grid: np.ndarray
    pressure: np.ndarray  # shape (len(L_grid), len(T_grid))

    @property
    def attractive(self) -> np.ndarray:
        return self.pressure < 0.0


def phase_diagram(
    field_kind: FieldKind,
    theta: int,
    L_grid,
    T_grid,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> PhaseDiagram:
    """Per-cell sign and magnitude of the massless total pressure; the
    sign boundary follows the hyperbola L*T = xi*."""
    L_grid = np.asarray(L_grid, dtype=float)
    T_grid = np.asarray(T_grid, dtype=float)
    if L_grid.size == 0 or T_grid.size == 0:
        raise ValueError("phase diagram grids must be non-empty")
    if np.any(np.diff(L_grid) <= 0) or np.any(np.diff(T_grid) <= 0):
        raise ValueError("phase diagram grids must be strictly increasing")
    pref = massless_prefactor(field_kind, theta)
    out = np.empty((L_grid.size, T_grid.size))
    for i, L in enumerate(L_grid):
        for j, T in enumerate(T_grid):
            try:
                g = g_function(field_kind, theta, L * T, ctrl) if T > 0 else 1.0
            except NonConvergenceError as exc:
                raise PhaseDiagramError(L, T, exc) from exc
            out[i, j] = pref * g / L**4
    return PhaseDiagram(field_kind, theta, L_grid, T_grid, out)


@dataclass(frozen=True)
class ForceCurves:
    """Massless total pressure versus cavity size at fixed temperatures."""

    field_kind: FieldKind
    theta: int
    temperatures: np.ndarray
    L_values: np.ndarray
    pressure: np.ndarray  # shape (len(temperatures), len(L_values))


def force_vs_length(
    field_kind: FieldKind,
    theta: int,
    temperatures,
    L_values,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> ForceCurves:
    temperatures = np.asarray(temperatures, dtype=float)
    L_values = np.asarray(L_values, dtype=float)
    pref = massless_prefactor(field_kind, theta)
    out = np.empty((temperatures.size, L_values.size))
    for i, T in enumerate(temperatures):
        for j, L in enumerate(L_values):
            g = g_function(field_kind, theta, L * T, ctrl) if T > 0 else 1.0
            out[i, j] = pref * g / L**4
    return ForceCurves(field_kind, theta, temperatures, L_values, out)

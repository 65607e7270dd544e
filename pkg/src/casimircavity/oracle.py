"""Independent brute-force references used to certify the main routes.

Layering: the quadrature integral certifies the Bessel evaluations; the
box-sum references certify summation and continuation machinery (their
own Bessel factors come from scipy directly, which the quadrature target
covers).  Nothing here imports the modules being certified: only the
shared summation engine and raw arithmetic.  Simplicity is preferred
over speed throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.special import kv as _scipy_kv


@dataclass(frozen=True)
class OracleReport:
    """One certification outcome: reference vs. main value."""

    target: str
    reference_value: float
    main_value: float
    rel_diff: float
    method: str


def make_report(
    target: str,
    reference_value: float,
    main_value: float,
    method: str,
    abs_floor: float = 1e-300,
) -> OracleReport:
    rel = abs(reference_value - main_value) / max(abs(reference_value), abs_floor)
    return OracleReport(target, reference_value, main_value, rel, method)


def _chunked_fsum(values: np.ndarray, chunk: int = 4096) -> float:
    flat = np.asarray(values, dtype=float).ravel()
    return math.fsum(
        float(np.sum(flat[i : i + chunk])) for i in range(0, flat.size, chunk)
    )


# ---------------------------------------------------------------------------
# Bessel reference: integral representation by adaptive quadrature
# ---------------------------------------------------------------------------

def bessel_quadrature(nu: float, z: float) -> float:
    """K_nu(z) from int_0^inf exp(-z cosh t) cosh(nu t) dt.

    The integrand is assembled from single exponentials so neither factor
    overflows; integration runs on an explicit finite window past which
    the integrand underflows.
    """
    if not z > 0.0:
        raise ValueError(f"quadrature oracle needs z > 0, got {z}")
    nu = abs(float(nu))

    def integrand(t: float) -> float:
        if t > 700.0:
            return 0.0
        a = -z * math.cosh(t)
        out = 0.0
        if a + nu * t > -745.0:
            out += 0.5 * math.exp(a + nu * t)
        if a - nu * t > -745.0:
            out += 0.5 * math.exp(a - nu * t)
        return out

    t_max = math.log(2.0 * (760.0 + nu * 50.0) / z + 10.0)
    value, err = quad(integrand, 0.0, t_max, epsabs=1e-300, epsrel=1e-13, limit=500)
    if not math.isfinite(value):
        raise ArithmeticError(f"quadrature failed for K_{nu}({z})")
    return value


# ---------------------------------------------------------------------------
# Epstein-Hurwitz zeta reference: raw box sums with Richardson tail removal
# ---------------------------------------------------------------------------

def _zeta_box_sum(d, nu, c, a, theta, n_box) -> float:
    if d == 1:
        n = np.arange(-n_box, n_box + 1, dtype=float)
        q = c * c + a[0] * (n + theta[0] / 2.0) ** 2
        return _chunked_fsum(q ** (-nu))
    rows = []
    n2 = np.arange(-n_box, n_box + 1, dtype=float)
    shifted2 = a[1] * (n2 + theta[1] / 2.0) ** 2
    for n1 in range(-n_box, n_box + 1):
        q = c * c + a[0] * (n1 + theta[0] / 2.0) ** 2 + shifted2
        rows.append(float(np.sum(q ** (-nu))))
    return math.fsum(rows)


def zeta_bruteforce(p, n_max: int) -> float:
    """Defining series over the box |n_i| <= n_max with the leading
    power-law tail removed by Richardson extrapolation from the
    half-size box (tail ~ N^{d - 2 nu}).

    ``p`` is anything exposing d, nu, c, a, theta; nu > d/2 is required.
    """
    d, nu, c, a, theta = p.d, p.nu, p.c, tuple(p.a), tuple(p.theta)
    if not nu > d / 2.0:
        raise ValueError("brute-force series needs nu > d/2")
    if d not in (1, 2):
        raise ValueError("brute-force series implemented for d in {1, 2}")
    s_half = _zeta_box_sum(d, nu, c, a, theta, n_max // 2)
    s_full = _zeta_box_sum(d, nu, c, a, theta, n_max)
    ratio = 2.0 ** (2.0 * nu - d)
    return (ratio * s_full - s_half) / (ratio - 1.0)


def central_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """Two-point central finite difference, the derivative oracle."""
    return (f(x + h) - f(x - h)) / (2.0 * h)


# ---------------------------------------------------------------------------
# massless lattice sums
# ---------------------------------------------------------------------------

def _profile_box_sum(xi, alt_space, alt_time, n_box) -> float:
    n2 = np.arange(1, n_box + 1, dtype=float)
    s2 = np.where(n2.astype(np.int64) % 2 == 0, 1.0, -1.0) if alt_time else np.ones_like(n2)
    rows = []
    for n1 in range(1, n_box + 1):
        den = (n1 * n1 + n2 * n2 / xi**2) ** 3
        num = 3.0 * n1 * n1 - n2 * n2 / xi**2
        row = float(np.sum(s2 * num / den))
        if alt_space and n1 % 2 == 1:
            row = -row
        rows.append(row)
    return math.fsum(rows)


def lattice_profile_reference(
    xi: float, alt_space: bool, alt_time: bool, n_max: int = 3000
) -> float:
    """Brute-force S(xi) = sum (+-) (3 n1^2 - n2^2/xi^2)/(n1^2+n2^2/xi^2)^3.

    The smooth (non-alternating) case gets Richardson removal of its
    1/N^2 tail; alternating weights already cancel the leading tail.
    """
    s_full = _profile_box_sum(xi, alt_space, alt_time, n_max)
    if alt_space or alt_time:
        return s_full
    s_half = _profile_box_sum(xi, alt_space, alt_time, n_max // 2)
    return (4.0 * s_full - s_half) / 3.0


def lattice_identity_check(n_max: int = 10_000) -> OracleReport:
    """Certify sum (3n1^2 - n2^2)/(n1^2+n2^2)^3 = sum 1/(n1^2+n2^2)^2
    over n1, n2 >= 1 by computing both sides independently (the
    difference is antisymmetric under n1 <-> n2 and cancels)."""
    n2 = np.arange(1, n_max + 1, dtype=float)
    n2sq = n2 * n2
    lhs_rows = []
    rhs_rows = []
    for n1 in range(1, n_max + 1):
        q = n1 * n1 + n2sq
        lhs_rows.append(float(np.sum((3.0 * n1 * n1 - n2sq) / q**3)))
        rhs_rows.append(float(np.sum(1.0 / q**2)))
    lhs = math.fsum(lhs_rows)
    rhs = math.fsum(rhs_rows)
    return make_report(
        "lattice_identity",
        rhs,
        lhs,
        f"dual box sums, n_max={n_max}",
    )


# ---------------------------------------------------------------------------
# pressure references: plain high-resolution sums, no truncation logic
# ---------------------------------------------------------------------------

def vacuum_reference(D, L, m, theta, degeneracy, n_max: int = 6000) -> float:
    n = np.arange(1, n_max + 1, dtype=float)
    cosv = np.cos(theta * math.pi * n) if theta not in (0.0, 1.0) else (
        np.ones_like(n) if theta == 0.0 else np.where(n.astype(np.int64) % 2 == 0, 1.0, -1.0)
    )
    s_a = _chunked_fsum(cosv * _scipy_kv(D / 2.0, m * n * L) / n ** (D / 2.0))
    s_b = _chunked_fsum(cosv * _scipy_kv(D / 2.0 - 1.0, m * n * L) / n ** (D / 2.0 - 1.0))
    pref = 2.0 * (m / (2.0 * math.pi * L)) ** (D / 2.0)
    return degeneracy * pref * ((1.0 - D) * s_a - m * L * s_b)


def thermal_reference(
    D, L, beta, m, theta, time_alternating, degeneracy, n_max: int = 400
) -> tuple[float, float, float]:
    """(vacuum, thermal, cross) from fixed high-resolution sums."""
    vac = vacuum_reference(D, L, m, theta, degeneracy, n_max=max(n_max, 4000))

    n = np.arange(1, max(n_max, 4000) + 1, dtype=float)
    w_t = np.where(n.astype(np.int64) % 2 == 0, 1.0, -1.0) if time_alternating else np.ones_like(n)
    s_t = _chunked_fsum(w_t * _scipy_kv(D / 2.0, m * beta * n) / n ** (D / 2.0))
    thermal = degeneracy * 2.0 * (m / (2.0 * math.pi * beta)) ** (D / 2.0) * s_t

    n1 = np.arange(1, n_max + 1, dtype=float)[:, None]
    n2 = np.arange(1, n_max + 1, dtype=float)[None, :]
    x = (n1 * L) ** 2
    y = (n2 * beta) ** 2
    r = np.sqrt(x + y)
    w1 = np.cos(theta * math.pi * n1) if theta not in (0.0, 1.0) else (
        np.ones_like(n1) if theta == 0.0 else np.where(n1.astype(np.int64) % 2 == 0, 1.0, -1.0)
    )
    w2 = (
        np.where(n2.astype(np.int64) % 2 == 0, 1.0, -1.0)
        if time_alternating
        else np.ones_like(n2)
    )
    kern = ((1.0 - D) * x + y) * r ** (-(D / 2.0 + 2.0)) * _scipy_kv(D / 2.0, m * r)
    kern = kern - m * x * r ** (-(D / 2.0 + 1.0)) * _scipy_kv(D / 2.0 - 1.0, m * r)
    cross = degeneracy * 4.0 * (m / (2.0 * math.pi)) ** (D / 2.0) * _chunked_fsum(
        w1 * w2 * kern
    )
    return vac, thermal, cross

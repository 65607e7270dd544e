import math

import numpy as np
import pytest

from casimircavity.oracle import lattice_profile_reference, thermal_reference
from casimircavity.pressure import (
    CavityConfig,
    FieldKind,
    InvalidConfigError,
    PressureBreakdown,
    _lattice_profile_sum,
    cross_component,
    dirichlet_pressure,
    g_function,
    massless_prefactor,
    massless_pressure_breakdown,
    massless_vacuum_pressure,
    thermal_component,
    thermal_pressure,
    vacuum_pressure,
)
from casimircavity.series import NonConvergenceError, SeriesControl
from casimircavity.zeta import (
    ZetaParams,
    zeta_da2_physical_rescaled,
    zeta_physical_rescaled,
)

CTRL = SeriesControl()
SCALAR, FERMION = FieldKind.SCALAR, FieldKind.FERMION


def vac_cfg(D=4, L=1.0, m=1.0, theta=0.0):
    return CavityConfig(D=D, L=L, beta=math.inf, m=m, theta=theta)


# ---------------------------------------------------------------------------
# massless closed forms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "field,theta,expected",
    [
        (SCALAR, 0.0, -math.pi**2 / 30.0),
        (SCALAR, 1.0, 7.0 * math.pi**2 / 240.0),
        (FERMION, 0.0, -2.0 * math.pi**2 / 15.0),
        (FERMION, 1.0, 7.0 * math.pi**2 / 60.0),
    ],
)
def test_massless_published_constants(field, theta, expected):
    cfg = CavityConfig(D=4, L=1.0, theta=theta)
    assert massless_vacuum_pressure(field, cfg) == pytest.approx(expected, abs=1e-12)


def test_massless_scales_as_inverse_fourth_power():
    base = massless_vacuum_pressure(FERMION, CavityConfig(D=4, L=1.0, theta=1.0))
    assert massless_vacuum_pressure(
        FERMION, CavityConfig(D=4, L=2.0, theta=1.0)
    ) == pytest.approx(base / 16.0, rel=1e-12)


def test_massless_general_dimension_against_series():
    # (1-D) Gamma(D/2) pi^{-D/2} C_D(theta) / L^D, with C_D from a raw sum
    for D, theta in [(3, 0.0), (5, 0.3), (4, 0.5), (6, 1.0), (2, 0.7)]:
        n = np.arange(1, 400_001, dtype=float)
        c_d = float(np.sum(np.cos(theta * math.pi * n) / n**D))
        expected = (1 - D) * math.gamma(D / 2) * math.pi ** (-D / 2) * c_d
        got = massless_vacuum_pressure(SCALAR, CavityConfig(D=D, L=1.0, theta=theta))
        assert got == pytest.approx(expected, rel=1e-8)


def test_massless_requires_zero_mass():
    with pytest.raises(InvalidConfigError):
        massless_vacuum_pressure(SCALAR, vac_cfg(m=0.5))


# ---------------------------------------------------------------------------
# massive vacuum pressure
# ---------------------------------------------------------------------------

def test_fermion_scalar_ratio_is_pure_degeneracy():
    rng = np.random.default_rng(20260809)
    for D in (2, 3, 4, 5):
        for _ in range(5):
            m = float(rng.uniform(0.2, 3.0))
            L = float(rng.uniform(0.3, 2.5))
            theta = float(rng.uniform(0.0, 1.0))
            cfg = vac_cfg(D=D, m=m, L=L, theta=theta)
            ps = vacuum_pressure(SCALAR, cfg, CTRL)
            pf = vacuum_pressure(FERMION, cfg, CTRL)
            assert pf / ps == pytest.approx(2 ** (D // 2), rel=1e-12)


def test_massive_approaches_massless_at_quadratic_rate():
    ref = massless_vacuum_pressure(SCALAR, CavityConfig(D=4, L=1.0))
    devs = []
    for mL in (1e-1, 1e-2, 1e-3):
        p = vacuum_pressure(SCALAR, vac_cfg(m=mL), CTRL)
        devs.append(abs(p - ref) / abs(ref))
    slope1 = math.log10(devs[0] / devs[1])
    slope2 = math.log10(devs[1] / devs[2])
    assert slope1 >= 1.9 and slope2 >= 1.9


def test_heavy_field_exponential_suppression():
    # leading term ~ K_2(m L) ~ e^{-mL}: at m L = 100 the pressure is
    # below e^{-100} times the prefactor scale
    p = vacuum_pressure(SCALAR, vac_cfg(m=10.0, L=10.0), CTRL)
    prefactor = 2.0 * (10.0 / (2.0 * math.pi * 10.0)) ** 2
    assert abs(p) < prefactor * math.exp(-100.0) * 1e3
    assert abs(p) > 0.0


def test_vacuum_requires_positive_mass():
    with pytest.raises(InvalidConfigError):
        vacuum_pressure(SCALAR, CavityConfig(D=4, L=1.0), CTRL)


def test_theta_continuity_of_vacuum_pressure():
    thetas = np.linspace(0.0, 1.0, 21)
    vals = [
        vacuum_pressure(SCALAR, vac_cfg(m=1.0, theta=float(t)), CTRL) for t in thetas
    ]
    diffs = np.abs(np.diff(vals))
    spread = max(vals) - min(vals)
    assert np.all(diffs < 0.15 * spread)


# ---------------------------------------------------------------------------
# thermal decomposition
# ---------------------------------------------------------------------------

def test_decomposition_total_is_exact_component_sum():
    cfg = CavityConfig(D=4, L=1.0, beta=0.7, m=1.3, theta=0.0)
    b = thermal_pressure(SCALAR, cfg, CTRL)
    assert b.total == b.vacuum + b.thermal + b.cross  # bit-for-bit


def test_infinite_beta_gives_pure_vacuum():
    cfg = CavityConfig(D=4, L=1.0, beta=math.inf, m=1.0)
    b = thermal_pressure(SCALAR, cfg, CTRL)
    assert b.thermal == 0.0 and b.cross == 0.0
    assert b.total == b.vacuum == pytest.approx(
        vacuum_pressure(SCALAR, vac_cfg(m=1.0)), rel=1e-12
    )


def test_large_beta_thermal_terms_vanish_exponentially():
    cfg = CavityConfig(D=4, L=1.0, beta=60.0, m=1.0)
    b = thermal_pressure(SCALAR, cfg, CTRL)
    assert abs(b.thermal) < 1e-20 and abs(b.cross) < 1e-20
    assert b.total == pytest.approx(b.vacuum, rel=1e-8)


def test_thermal_component_matches_d4_literal_form():
    # 2 (m/2 pi beta)^{D/2} sum K_2(m beta n)/n^2 == (m^2/2 pi^2 b^2) sum ...
    from scipy.special import kv

    m, beta = 1.2, 0.8
    cfg = CavityConfig(D=4, L=1.0, beta=beta, m=m)
    b = thermal_pressure(SCALAR, cfg, CTRL)
    n = np.arange(1, 4001, dtype=float)
    literal = (m**2 / (2.0 * math.pi**2 * beta**2)) * float(
        np.sum(kv(2, m * beta * n) / n**2)
    )
    assert b.thermal == pytest.approx(literal, rel=1e-10)


def test_stefan_boltzmann_limit():
    beta = 1.0
    cfg = CavityConfig(D=4, L=1.0, beta=beta, m=1e-3)
    sb = math.pi**2 / (90.0 * beta**4)
    assert abs(thermal_component(SCALAR, cfg, CTRL) - sb) / sb < 1e-3


def test_cross_component_flags_small_mass_budget_honestly():
    # deep in the small-mass regime the double sum cannot reach tolerance
    # within the budget; that must surface as an error, not a wrong value
    cfg = CavityConfig(D=4, L=1.0, beta=1.0, m=1e-3)
    with pytest.raises(NonConvergenceError):
        cross_component(SCALAR, cfg, SeriesControl(max_terms=1_000_000))


def test_bulk_limit_recovers_stefan_boltzmann():
    # L -> infinity at fixed beta: vacuum and cross die, total -> SB
    cfg = CavityConfig(D=4, L=40.0, beta=1.0, m=1.0)
    b = thermal_pressure(SCALAR, cfg, CTRL)
    assert abs(b.vacuum) + abs(b.cross) < 1e-14 * abs(b.thermal)
    massless = massless_pressure_breakdown(
        SCALAR, CavityConfig(D=4, L=1000.0, beta=1.0, m=0.0), CTRL
    )
    assert massless.total == pytest.approx(math.pi**2 / 90.0, rel=1e-8)


def test_thermal_total_matches_high_resolution_reference():
    cfg = CavityConfig(D=4, L=1.0, beta=1.0, m=1.0, theta=0.0)
    b = thermal_pressure(SCALAR, cfg, CTRL)
    vac, th, cross = thermal_reference(4, 1.0, 1.0, 1.0, 0.0, False, 1, n_max=200)
    assert b.total == pytest.approx(vac + th + cross, rel=1e-9)
    b_f = thermal_pressure(FERMION, CavityConfig(D=4, L=1.0, beta=0.8, m=1.5, theta=1.0), CTRL)
    ref_f = thermal_reference(4, 1.0, 0.8, 1.5, 1.0, True, 4, n_max=200)
    assert b_f.total == pytest.approx(sum(ref_f), rel=1e-9)


# ---------------------------------------------------------------------------
# the zeta route as an independent assembly of the same physics
# ---------------------------------------------------------------------------

def _f_coeff(nu: float, lengths: float) -> float:
    # common prefactor of the stress assembly at s = 1
    return (1.0 / (2.0 * lengths)) / (
        (4.0 * math.pi) ** (1.0 - nu) * (2.0 * math.pi) ** (2.0 * (nu - 1.0))
    )


def vacuum_via_zeta(D: int, L: float, m: float, theta: float) -> float:
    nu = (3.0 - D) / 2.0
    a = (L**-2,)
    c = m / (2.0 * math.pi)
    g1 = zeta_physical_rescaled(ZetaParams(1, nu - 1.0, c, a, (theta,)), CTRL)
    g2 = zeta_physical_rescaled(ZetaParams(1, nu, c, a, (theta,)), CTRL)
    return _f_coeff(nu, L) * ((2.0 * nu - 2.0) * g1 - 2.0 * c * c * g2)


@pytest.mark.parametrize(
    "D,L,m,theta",
    [(4, 1.0, 1.0, 0.0), (4, 2.0, 0.5, 1.0), (3, 1.0, 1.0, 0.0), (5, 1.5, 0.7, 0.5), (2, 1.0, 1.0, 0.0)],
)
def test_vacuum_pressure_equals_zeta_assembly(D, L, m, theta):
    direct = vacuum_pressure(SCALAR, vac_cfg(D=D, L=L, m=m, theta=theta), CTRL)
    assert vacuum_via_zeta(D, L, m, theta) == pytest.approx(direct, rel=1e-9)


def thermal_via_zeta(field, D, L, beta, m, theta1):
    nu = (4.0 - D) / 2.0
    a = (L**-2, beta**-2)
    th = (theta1, field.theta_time)
    c = m / (2.0 * math.pi)
    f = _f_coeff(nu, beta * L)
    r_lo = zeta_physical_rescaled(ZetaParams(2, nu - 1.0, c, a, th), CTRL)
    r_hi = zeta_physical_rescaled(ZetaParams(2, nu, c, a, th), CTRL)
    dr_lo = zeta_da2_physical_rescaled(ZetaParams(2, nu - 1.0, c, a, th), CTRL)
    if field is SCALAR:
        # Gamma(nu-1)[(2nu-3) Z(nu-1) - 2 c^2 (nu-1) Z(nu) + 2 a2 dZ(nu-1)/da2]
        return f * ((2.0 * nu - 2.0) * r_lo - 2.0 * c * c * r_hi + 2.0 * a[1] * dr_lo)
    # fermion: 2^{1+floor(D/2)} Gamma(nu)[Z(nu-1) - c^2 Z(nu) + a2/(nu-1) dZ(nu-1)/da2]
    return (
        2.0 ** (1 + D // 2)
        * f
        * ((nu - 1.0) * r_lo - c * c * r_hi + a[1] * dr_lo)
    )


@pytest.mark.parametrize(
    "field,L,beta,m,theta1",
    [
        (SCALAR, 1.0, 1.0, 1.0, 0.0),
        (SCALAR, 1.0, 0.5, 2.0, 1.0),
        (SCALAR, 2.0, 1.0, 1.5, 0.0),
        (FERMION, 1.0, 1.0, 1.0, 0.0),
        (FERMION, 1.0, 0.8, 1.5, 1.0),
    ],
)
def test_thermal_total_equals_zeta_assembly(field, L, beta, m, theta1):
    cfg = CavityConfig(D=4, L=L, beta=beta, m=m, theta=theta1)
    direct = thermal_pressure(field, cfg, CTRL).total
    assert thermal_via_zeta(field, 4, L, beta, m, theta1) == pytest.approx(
        direct, rel=1e-8
    )


# ---------------------------------------------------------------------------
# massless profile g(xi)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("field,theta", [(SCALAR, 0), (SCALAR, 1), (FERMION, 0), (FERMION, 1)])
def test_g_approaches_one_at_small_xi(field, theta):
    assert g_function(field, theta, 1e-3, CTRL) == pytest.approx(1.0, abs=1e-10)


def test_g_scalar_periodic_changes_sign_near_published_root():
    assert g_function(SCALAR, 0, 1.51, CTRL) > 0.0
    assert g_function(SCALAR, 0, 1.53, CTRL) < 0.0


def test_profile_sum_lattice_identity_at_unit_aspect():
    # at xi = 1 the profile sum collapses to sum 1/(n1^2+n2^2)^2 by the
    # antisymmetry of (n1^2 - n2^2)/(n1^2 + n2^2)^3 under index swap
    s = _lattice_profile_sum(1.0, False, False, CTRL)
    n1 = np.arange(1, 4001, dtype=float)[:, None]
    n2 = np.arange(1, 4001, dtype=float)[None, :]
    box = float(np.sum((n1**2 + n2**2) ** -2.0))
    extrap = box  # tail ~ 1/N^2 still visible; use Richardson from half box
    half = float(np.sum((n1[:2000] ** 2 + n2[:, :2000] ** 2) ** -2.0))
    extrap = (4.0 * box - half) / 3.0
    assert s == pytest.approx(extrap, rel=1e-8)


@pytest.mark.parametrize(
    "alt_space,alt_time",
    [(False, False), (True, False), (False, True), (True, True)],
)
@pytest.mark.parametrize("xi", [0.5, 1.0, 1.52])
def test_profile_sum_against_bruteforce(xi, alt_space, alt_time):
    ref = lattice_profile_reference(xi, alt_space, alt_time, n_max=2500)
    val = _lattice_profile_sum(xi, alt_space, alt_time, CTRL)
    assert val == pytest.approx(ref, rel=2e-7, abs=1e-10)


def test_g_sign_structure_massless():
    xis = np.linspace(0.01, 3.0, 60)
    assert all(g_function(SCALAR, 1, float(x), CTRL) > 0.0 for x in xis)
    assert all(g_function(FERMION, 0, float(x), CTRL) > 0.0 for x in xis)


def test_g_rejects_bad_inputs():
    with pytest.raises(InvalidConfigError):
        g_function(SCALAR, 2, 1.0, CTRL)
    with pytest.raises(InvalidConfigError):
        g_function(SCALAR, 0, 0.0, CTRL)


def test_massless_breakdown_matches_profile():
    cfg = CavityConfig(D=4, L=1.0, beta=0.8, m=0.0, theta=0.0)
    b = massless_pressure_breakdown(SCALAR, cfg, CTRL)
    xi = cfg.L / cfg.beta
    pref = massless_prefactor(SCALAR, 0)
    assert b.total == pytest.approx(pref * g_function(SCALAR, 0, xi, CTRL), rel=1e-10)
    assert b.vacuum == pytest.approx(pref, rel=1e-12)
    assert b.thermal == pytest.approx(math.pi**2 / (90.0 * cfg.beta**4), rel=1e-12)
    assert b.total == b.vacuum + b.thermal + b.cross


def test_fermion_massless_breakdown_thermal_sign():
    # antiperiodic imaginary time flips the pure-thermal term negative
    cfg = CavityConfig(D=4, L=1.0, beta=1.0, m=0.0, theta=0.0)
    b = massless_pressure_breakdown(FERMION, cfg, CTRL)
    assert b.thermal == pytest.approx(-7.0 * math.pi**2 / 180.0, rel=1e-12)


# ---------------------------------------------------------------------------
# Dirichlet mapping
# ---------------------------------------------------------------------------

def test_dirichlet_quarter_wavelength_values():
    cfg = CavityConfig(D=4, L=1.0)
    assert dirichlet_pressure(cfg) == pytest.approx(-math.pi**2 / 480.0, abs=1e-12)
    assert dirichlet_pressure(cfg, electromagnetic=True) == pytest.approx(
        -math.pi**2 / 240.0, abs=1e-12
    )
    half = CavityConfig(D=4, L=0.5)
    assert dirichlet_pressure(half) == pytest.approx(-math.pi**2 / 30.0, abs=1e-12)


def test_dirichlet_rejects_massive_or_twisted():
    with pytest.raises(InvalidConfigError):
        dirichlet_pressure(CavityConfig(D=4, L=1.0, m=1.0))
    with pytest.raises(InvalidConfigError):
        dirichlet_pressure(CavityConfig(D=4, L=1.0, theta=1.0))


# ---------------------------------------------------------------------------
# configuration validation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "kwargs",
    [
        {"D": 1, "L": 1.0},
        {"D": 4, "L": 0.0},
        {"D": 4, "L": 1.0, "beta": 0.0},
        {"D": 4, "L": 1.0, "m": -1.0},
        {"D": 4, "L": 1.0, "theta": 1.2},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(InvalidConfigError):
        CavityConfig(**kwargs)


def test_breakdown_construction():
    b = PressureBreakdown.from_components(1.0, 2.0, 3.0)
    assert b.total == 6.0


def test_field_kind_statistics():
    assert SCALAR.theta_time == 0.0
    assert FERMION.theta_time == 1.0  # antiperiodic imaginary time
    assert [FERMION.degeneracy(D) for D in (2, 3, 4, 5)] == [2, 2, 4, 4]
    assert all(SCALAR.degeneracy(D) == 1 for D in (2, 3, 4, 5))
    assert FieldKind("fermion") is FERMION

"""Quantum vacuum and thermal pressure in compactified cavities.

Evaluates the boundary pressure for free scalar and fermionic fields
with one compactified spatial direction, at zero and finite
temperature, and locates the attractive/repulsive crossover in the
(L, T) plane.  Natural units (hbar = c = k_B = 1) throughout.
"""

from .crossover import (
    HBAR_C_MEV_FM,
    KB_MEV_PER_K,
    CrossoverResult,
    ForceCurves,
    PhaseDiagram,
    PhaseDiagramError,
    find_crossover,
    force_vs_length,
    phase_diagram,
)
from .pressure import (
    CavityConfig,
    FieldKind,
    InvalidConfigError,
    PressureBreakdown,
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
from .series import (
    DEFAULT_CONTROL,
    NonConvergenceError,
    SeriesControl,
    SumResult,
    TailMode,
    sum_until,
)
from .specfun import (
    BesselDomainError,
    BesselOrder,
    BesselOverflowError,
    GammaPoleError,
    bessel_k,
    bessel_k_small_z,
)
from .zeta import (
    ZetaParams,
    ZetaPoleError,
    zeta_continued,
    zeta_continued_da2,
    zeta_direct,
)

__version__ = "0.1.0"

__all__ = [
    "BesselDomainError",
    "BesselOrder",
    "BesselOverflowError",
    "CavityConfig",
    "CrossoverResult",
    "DEFAULT_CONTROL",
    "FieldKind",
    "ForceCurves",
    "GammaPoleError",
    "HBAR_C_MEV_FM",
    "InvalidConfigError",
    "KB_MEV_PER_K",
    "NonConvergenceError",
    "PhaseDiagram",
    "PhaseDiagramError",
    "PressureBreakdown",
    "SeriesControl",
    "SumResult",
    "TailMode",
    "ZetaParams",
    "ZetaPoleError",
    "bessel_k",
    "bessel_k_small_z",
    "cross_component",
    "dirichlet_pressure",
    "find_crossover",
    "force_vs_length",
    "g_function",
    "massless_prefactor",
    "massless_pressure_breakdown",
    "massless_vacuum_pressure",
    "phase_diagram",
    "sum_until",
    "thermal_component",
    "thermal_pressure",
    "vacuum_pressure",
    "zeta_continued",
    "zeta_continued_da2",
    "zeta_direct",
    "__version__",
]

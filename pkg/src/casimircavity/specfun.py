"""Modified Bessel functions of the second kind for the orders the pressure
sums produce (integer and half-integer), plus gamma-function helpers.

Half-integer orders use the exact closed form built from K_{1/2} and K_{3/2}
by upward recurrence (the stable direction for K).  Integer orders delegate
to scipy's AMOS-backed ``kv``, which meets the 1e-12 relative-accuracy
contract across z in [1e-6, 700]; a two-branch series/asymptotic split
cannot reach that in the intermediate-z gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import kv as _scipy_kv

DBL_MIN = 2.2250738585072014e-308
DBL_MAX = 1.7976931348623157e308


class BesselDomainError(ValueError):
    """Argument outside the supported domain (z <= 0, or bad order)."""


class BesselOverflowError(OverflowError):
    """K_nu(z) exceeds the representable double range (z too small)."""


class GammaPoleError(ValueError):
    """Gamma evaluated at a non-positive integer."""


@dataclass(frozen=True)
class BesselOrder:
    """Order nu stored as 2*nu so integer and half-integer orders are exact."""

    twice_nu: int

    def __post_init__(self):
        if not isinstance(self.twice_nu, int):
            raise BesselDomainError(f"twice_nu must be int, got {self.twice_nu!r}")
        if self.twice_nu < 0:
            raise BesselDomainError(
                "negative orders must be resolved via K_{-nu} = K_nu before "
                f"construction (got twice_nu={self.twice_nu})"
            )

    @classmethod
    def from_nu(cls, nu: float) -> "BesselOrder":
        """Build from a float order; K_{-nu} = K_nu resolves negatives."""
        doubled = 2.0 * abs(nu)
        rounded = round(doubled)
        if abs(doubled - rounded) > 1e-9:
            raise BesselDomainError(
                f"order {nu} is neither integer nor half-integer"
            )
        return cls(int(rounded))

    @property
    def nu(self) -> float:
        return self.twice_nu / 2.0

    @property
    def is_half_integer(self) -> bool:
        return self.twice_nu % 2 == 1


def _k_half_integer_grid(twice_nu: int, z: np.ndarray) -> np.ndarray:
    # K_{1/2}(z) = sqrt(pi/2z) e^{-z}; K_{3/2} = K_{1/2} (1 + 1/z); then
    # upward recurrence K_{nu+1} = K_{nu-1} + (2 nu / z) K_nu.
    k_lo = np.sqrt(np.pi / (2.0 * z)) * np.exp(-z)
    if twice_nu == 1:
        return k_lo
    k_hi = k_lo * (1.0 + 1.0 / z)
    order = 1.5
    while round(2 * order) < twice_nu:
        k_lo, k_hi = k_hi, k_lo + (2.0 * order / z) * k_hi
        order += 1.0
    return k_hi


def bessel_k_grid(order: BesselOrder, z: np.ndarray) -> np.ndarray:
    """Vectorized K_nu over an array of positive arguments.

    Underflow is returned as exact 0.0 (subnormals are snapped to zero) so
    series layers can treat a zero term as a terminated tail.  Overflow
    raises instead of returning inf.
    """
    z = np.asarray(z, dtype=float)
    if z.size and (not np.all(np.isfinite(z)) or np.any(z <= 0.0)):
        raise BesselDomainError("bessel_k requires finite z > 0")
    if order.is_half_integer:
        with np.errstate(over="raise", divide="raise"):
            try:
                out = _k_half_integer_grid(order.twice_nu, z)
            except FloatingPointError as exc:
                raise BesselOverflowError(
                    f"K_{order.nu}(z) overflows for min(z)={z.min():.3e}"
                ) from exc
    else:
        out = _scipy_kv(float(order.nu), z)
        if np.any(np.isinf(out)):
            bad = float(z[np.isinf(out)].min())
            raise BesselOverflowError(f"K_{order.nu}({bad:.3e}) overflows")
    out = np.asarray(out, dtype=float)
    out[out < DBL_MIN] = 0.0
    return out


def bessel_k(order: BesselOrder, z: float) -> float:
    """K_nu(z) for z > 0; exact 0.0 once the value underflows."""
    if not isinstance(order, BesselOrder):
        raise BesselDomainError("order must be a BesselOrder")
    if not (isinstance(z, (int, float)) and math.isfinite(z)) or z <= 0.0:
        raise BesselDomainError(f"bessel_k requires finite z > 0, got {z!r}")
    return float(bessel_k_grid(order, np.array([float(z)]))[0])


def bessel_k_small_z(order: BesselOrder, z: float) -> float:
    """Leading small-argument form 2^{nu-1} Gamma(nu) z^{-nu} (nu > 0)."""
    if not isinstance(order, BesselOrder) or order.twice_nu <= 0:
        raise BesselDomainError("small-z asymptotic needs order nu > 0")
    if not z > 0.0:
        raise BesselDomainError(f"bessel_k_small_z requires z > 0, got {z!r}")
    nu = order.nu
    value = 2.0 ** (nu - 1.0) * math.gamma(nu) * z ** (-nu)
    if value > DBL_MAX:
        raise BesselOverflowError(f"K_{nu}({z:.3e}) small-z form overflows")
    return value


def is_gamma_pole(x: float, tol: float = 1e-12) -> bool:
    """True where Gamma(x) is singular (x a non-positive integer)."""
    return x <= tol and abs(x - round(x)) <= tol


def gamma(x: float) -> float:
    """Gamma function with an explicit pole signal."""
    if is_gamma_pole(x):
        raise GammaPoleError(f"Gamma({x}) is singular")
    return math.gamma(x)

"""Shared summation kernels: weighted Bessel power series with rigorous
tail bounds, used by both the zeta continuation and the pressure layer."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .series import SeriesControl, SumResult, sum_until
from .specfun import BesselOrder, bessel_k_grid

_CHUNK = 64

WeightFn = Callable[[np.ndarray], np.ndarray]


def cos_weight(theta: float) -> WeightFn:
    """cos(theta*pi*n) as an array weight; exact at theta = 0 and 1."""
    if theta == 0.0:
        return lambda ns: np.ones_like(ns)
    if theta == 1.0:
        return lambda ns: np.where(ns.astype(np.int64) % 2 == 0, 1.0, -1.0)
    return lambda ns: np.cos(theta * np.pi * ns)


def bessel_power_series_sum(
    order: BesselOrder,
    lam: float,
    power: float,
    weight: WeightFn,
    ctrl: SeriesControl,
    pair_alternating: bool = False,
) -> SumResult:
    """Sum_{n>=1} weight(n) * n^power * K_order(lam*n) with |weight| <= 1.

    Tail bounds combine two routes and take the smaller:
      - exponential: K_nu(z) <= K_nu(z0) e^{-(z - z0)} once z0 >= nu, so the
        envelope decays at least geometrically with ratio
        exp(-lam + max(power, 0)/n);
      - power law (power < -1): K is decreasing, so the tail is below
        K(lam*n) * n^{power+1} / (-power - 1) by integral comparison.
    """
    if lam <= 0.0:
        raise ValueError(f"decay rate lam must be positive, got {lam}")
    nu = order.nu
    state = {"env": math.inf}

    def terms():
        n0 = 1
        while True:
            ns = np.arange(n0, n0 + _CHUNK, dtype=float)
            ks = bessel_k_grid(order, lam * ns)
            envs = ns**power * ks
            vals = weight(ns) * envs
            for v, e in zip(vals.tolist(), envs.tolist()):
                state["env"] = e
                yield v
            n0 += _CHUNK

    def tail_bound(n_used: int, _last: float) -> float:
        env = state["env"]
        if env == 0.0:
            return 0.0  # underflowed Bessel factor terminates the tail
        n = n_used
        best = math.inf
        if lam * n >= nu:
            r = math.exp(-lam + max(power, 0.0) / n)
            if r < 1.0:
                best = env * r / (1.0 - r)
        if power < -1.0:
            best = min(best, env * n / (-power - 1.0))
        return best

    return sum_until(terms(), tail_bound, ctrl, pair_alternating=pair_alternating)

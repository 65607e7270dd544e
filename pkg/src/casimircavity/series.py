"""Tolerance-driven summation: compensated accumulation, tail bounds, doubling.

Every infinite sum in this package (single Bessel series, double lattice
sums, zeta tails) goes through the two drivers here, so truncation policy
and error reporting are uniform.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Tuple


class SeriesError(Exception):
    """Base class for summation failures."""


class NonConvergenceError(SeriesError):
    """Tolerance was not reached within the term budget."""

    def __init__(self, message: str, result: "SumResult"):
        super().__init__(message)
        self.result = result


class TailMode(enum.Enum):
    """Which tail-estimation strategy a caller builds its bound from."""

    EXP_BOUND = "exp_bound"
    SHELL_DOUBLING = "shell_doubling"
    INTEGRAL_COMPARE = "integral_compare"


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy shared by all series evaluations.

    rel_tol : target relative truncation error
    abs_floor : scale used in place of |value| when the sum is near zero
    max_terms : hard budget on evaluated terms (lattice points for 2D sums)
    tail_mode : advisory tag describing the bound used by the caller
    """

    rel_tol: float = 1e-10
    abs_floor: float = 1e-300
    max_terms: int = 10_000_000
    tail_mode: TailMode = TailMode.EXP_BOUND

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError(f"rel_tol must be in (0, 1), got {self.rel_tol}")
        if self.abs_floor <= 0.0:
            raise ValueError("abs_floor must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class SumResult:
    """Outcome of a truncated summation.

    When ``converged`` is true the reported ``tail_estimate`` is an upper
    bound on the absolute truncation error and satisfies
    ``tail_estimate <= rel_tol * max(|value|, abs_floor)``.
    """

    value: float
    terms_used: int
    tail_estimate: float
    converged: bool

    def require_converged(self, what: str) -> float:
        if not self.converged:
            raise NonConvergenceError(
                f"{what}: tolerance not reached after {self.terms_used} terms "
                f"(tail estimate {self.tail_estimate:.3e})",
                self,
            )
        return self.value


class NeumaierSum:
    """Compensated (error-free transformation) accumulator."""

    __slots__ = ("_s", "_c")

    def __init__(self, initial: float = 0.0):
        self._s = float(initial)
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


def sum_until(
    term_gen: Iterable[float],
    bound_gen: Callable[[int, float], float],
    ctrl: SeriesControl = DEFAULT_CONTROL,
    pair_alternating: bool = False,
) -> SumResult:
    """Accumulate ``term_gen`` until ``bound_gen`` certifies the tail.

    Parameters
    ----------
    term_gen : iterable of float
        Series terms in summation order.  Exhaustion means the sum is
        exact (tail 0).
    bound_gen : callable ``(terms_used, last_term) -> float``
        Upper bound on the absolute value of the remaining tail after
        ``terms_used`` terms.  May return ``inf`` while no bound is
        available yet.
    pair_alternating : bool
        Consume terms two at a time before testing, so a near-cancelling
        adjacent pair cannot trigger a premature stop.

    Accumulation is compensated, hence effectively order-independent at
    the 1e-16 level for the term counts used here.
    """
    acc = NeumaierSum()
    it: Iterator[float] = iter(term_gen)
    used = 0
    last = math.inf
    exhausted = False
    while used < ctrl.max_terms:
        pulls = 2 if pair_alternating else 1
        for _ in range(pulls):
            try:
                last = next(it)
            except StopIteration:
                exhausted = True
                break
            acc.add(last)
            used += 1
        if exhausted:
            return SumResult(acc.value, used, 0.0, True)
        bound = bound_gen(used, last)
        if bound <= ctrl.rel_tol * max(abs(acc.value), ctrl.abs_floor):
            return SumResult(acc.value, used, bound, True)
    return SumResult(acc.value, used, math.inf, False)


BlockFn = Callable[[int, int, int, int], Tuple[float, float]]


def double_sum_doubling(
    block_fn: BlockFn,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    start: int = 8,
) -> SumResult:
    """Sum a double series over n1, n2 >= 1 by doubling square rectangles.

    ``block_fn(i_lo, i_hi, j_lo, j_hi)`` returns ``(signed, magnitude)``
    for the inclusive index block: the signed block sum and the sum of
    absolute term values.  The rectangle side doubles until two
    consecutive increments certify a geometric tail below tolerance.
    Whole-rectangle increments make alternating weights safe: every
    increment contains complete sign cycles.
    """
    n = start
    signed, _mag = block_fn(1, n, 1, n)
    acc = NeumaierSum(signed)
    used = n * n
    prev_inc: float | None = None
    while used < ctrl.max_terms:
        s1, m1 = block_fn(n + 1, 2 * n, 1, n)
        s2, m2 = block_fn(1, n, n + 1, 2 * n)
        s3, m3 = block_fn(n + 1, 2 * n, n + 1, 2 * n)
        acc.add(s1)
        acc.add(s2)
        acc.add(s3)
        inc = m1 + m2 + m3
        used = 4 * n * n
        n *= 2
        if prev_inc is not None and prev_inc > 0.0 and inc < prev_inc:
            q = inc / prev_inc
            tail = inc * q / (1.0 - q)
            if inc + tail <= ctrl.rel_tol * max(abs(acc.value), ctrl.abs_floor):
                return SumResult(acc.value, used, inc + tail, True)
        if inc == 0.0:
            return SumResult(acc.value, used, 0.0, True)
        prev_inc = inc
    return SumResult(acc.value, used, math.inf, False)

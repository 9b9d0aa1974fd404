"""Threshold temperatures, coherence maxima, and temperature sweeps.

The concurrence of this model dies suddenly: past a threshold temperature the
closed-form max saturates at exactly zero, so the threshold is the boundary
of the exact-zero region and the search predicate is simply C(T) > 0 - no
epsilon policy is needed.  The bracket is seeded at T = Omega (the spectral
scale, within a few orders of magnitude of every regime's threshold),
expanded geometrically, pre-scanned on a log grid to guard against
non-monotone sign patterns, and then bisected.

The l1 coherence has a single interior maximum whenever delta > 0; it is
located by a coarse log-grid scan refined with golden-section search in
log-temperature (an absolute tolerance in log T is a relative tolerance
in T).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .correlations import Branch, concurrence_x, report
from .model import ModelParams, eigensystem
from .thermal import thermal_state

_EXPANSION_FACTOR = 4.0
_EXPANSION_LIMIT = 1e12  # give up above this multiple of Omega
_PRESCAN_POINTS = 64
_SCAN_POINTS = 200
_SCAN_SPAN = 1e4  # coarse scan covers [Omega/span, Omega*span]
_GOLDEN_TOL = 1e-8  # relative tolerance on the maximizer temperature
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class Spacing(Enum):
    LOG = "log"
    LINEAR = "linear"


@dataclass(frozen=True)
class SweepSpec:
    """One curve: a parameter set and a temperature grid."""

    params: ModelParams
    t_min: float
    t_max: float
    n_points: int
    spacing: Spacing = Spacing.LOG

    def __post_init__(self) -> None:
        if not (0.0 < self.t_min < self.t_max) or not math.isfinite(self.t_max):
            raise ValueError(
                f"need 0 < t_min < t_max finite, got ({self.t_min}, {self.t_max})"
            )
        if self.n_points < 2:
            raise ValueError(f"n_points must be >= 2, got {self.n_points}")

    def grid(self) -> np.ndarray:
        if self.spacing is Spacing.LOG:
            return np.geomspace(self.t_min, self.t_max, self.n_points)
        return np.linspace(self.t_min, self.t_max, self.n_points)


class SweepRow(NamedTuple):
    temperature: float
    concurrence: float
    l1_norm: float
    g1: float
    g2: float
    branch: Branch


class ThresholdStatus(Enum):
    FOUND = "found"
    ALWAYS_ZERO = "always_zero"
    NEVER_ZERO_IN_RANGE = "never_zero_in_range"


@dataclass(frozen=True)
class ThresholdResult:
    """Entanglement sudden-death temperature.

    t_th is the upper bracket edge (a temperature where C is already exactly
    zero); it is NaN unless status is FOUND.  bracket holds the final
    (positive side, zero side) pair and iterations counts bisection steps.
    """

    t_th: float
    bracket: tuple[float, float]
    iterations: int
    status: ThresholdStatus


class MaximumStatus(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    DEGENERATE = "degenerate"  # l1 identically zero (delta = 0)


class CoherenceMaximum(NamedTuple):
    t_star: float
    l1_max: float
    status: MaximumStatus


def _concurrence_at(params: ModelParams, temperature: float) -> float:
    return concurrence_x(thermal_state(params, temperature))


def threshold_temperature(params: ModelParams, rel_tol: float = 1e-6) -> ThresholdResult:
    """Smallest temperature at which the concurrence is exactly zero.

    rel_tol bounds the final bracket width relative to the threshold and
    must lie in (0, 1e-2].
    """
    if not (0.0 < rel_tol <= 1e-2):
        raise ValueError(f"rel_tol must be in (0, 1e-2], got {rel_tol}")
    if params.delta == 0.0:
        return ThresholdResult(
            t_th=math.nan,
            bracket=(math.nan, math.nan),
            iterations=0,
            status=ThresholdStatus.ALWAYS_ZERO,
        )

    omega = eigensystem(params).omega
    t_low = 1e-6 * omega
    if _concurrence_at(params, t_low) <= 0.0:
        return ThresholdResult(
            t_th=math.nan,
            bracket=(math.nan, math.nan),
            iterations=0,
            status=ThresholdStatus.ALWAYS_ZERO,
        )

    # geometric expansion from the spectral scale until C hits zero
    t_hi = omega
    while _concurrence_at(params, t_hi) > 0.0:
        t_hi *= _EXPANSION_FACTOR
        if t_hi > _EXPANSION_LIMIT * omega:
            return ThresholdResult(
                t_th=math.nan,
                bracket=(t_low, t_hi),
                iterations=0,
                status=ThresholdStatus.NEVER_ZERO_IN_RANGE,
            )

    # log pre-scan; bisect in the last positive-to-zero transition in case
    # the sign pattern were ever non-monotone
    grid = np.geomspace(t_low, t_hi, _PRESCAN_POINTS)
    positive = [_concurrence_at(params, t) > 0.0 for t in grid]
    lo, hi = t_low, t_hi
    for i in range(_PRESCAN_POINTS - 1, 0, -1):
        if positive[i - 1] and not positive[i]:
            lo, hi = float(grid[i - 1]), float(grid[i])
            break

    iterations = 0
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # float exhaustion
            break
        if _concurrence_at(params, mid) > 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1

    return ThresholdResult(
        t_th=hi,
        bracket=(lo, hi),
        iterations=iterations,
        status=ThresholdStatus.FOUND,
    )


def _l1_at(params: ModelParams, temperature: float) -> float:
    state = thermal_state(params, temperature)
    return 2.0 * abs(state.rho14) + 2.0 * abs(state.rho23)


def coherence_maximum(params: ModelParams) -> CoherenceMaximum:
    """Interior maximum of C_l1(T), or the degenerate/boundary diagnosis."""
    omega = eigensystem(params).omega
    if params.delta == 0.0 or omega == 0.0:
        # C_l1 is identically zero; report the scan-range centre
        t_mid = omega if omega > 0.0 else 1.0
        return CoherenceMaximum(t_star=t_mid, l1_max=0.0, status=MaximumStatus.DEGENERATE)

    grid = np.geomspace(omega / _SCAN_SPAN, omega * _SCAN_SPAN, _SCAN_POINTS)
    values = np.array([_l1_at(params, t) for t in grid])
    i = int(values.argmax())
    if i == 0 or i == _SCAN_POINTS - 1:
        return CoherenceMaximum(
            t_star=float(grid[i]), l1_max=float(values[i]), status=MaximumStatus.BOUNDARY
        )

    # golden-section in log T on the bracketing grid cells
    a, b = math.log(grid[i - 1]), math.log(grid[i + 1])
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = _l1_at(params, math.exp(c))
    fd = _l1_at(params, math.exp(d))
    while b - a > _GOLDEN_TOL:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = _l1_at(params, math.exp(c))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = _l1_at(params, math.exp(d))
    t_star = math.exp(0.5 * (a + b))
    l1_max = _l1_at(params, t_star)
    # the refinement never reports less than the coarse scan
    if l1_max < values[i]:
        t_star, l1_max = float(grid[i]), float(values[i])
    return CoherenceMaximum(t_star=t_star, l1_max=l1_max, status=MaximumStatus.INTERIOR)


def sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the correlation report on the grid, ascending in T."""
    rows = []
    for t in spec.grid():
        rep = report(spec.params, float(t))
        rows.append(
            SweepRow(
                temperature=float(t),
                concurrence=rep.concurrence,
                l1_norm=rep.l1_norm,
                g1=rep.g1,
                g2=rep.g2,
                branch=rep.branch,
            )
        )
    return rows

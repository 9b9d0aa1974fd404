"""Closed-form thermal (Gibbs) density operator of the coupled pair.

The Hamiltonian couples the basis states only inside two 2x2 blocks, so the
equilibrium state exp(-beta H)/Z keeps an X shape for every temperature: the
only nonzero elements are the diagonal and the anti-diagonal, and by symmetry
rho22 = rho33 and rho14 = rho41, rho23 = rho32 (all real).  Five independent
numbers describe the state:

    rho11 = (e^{-beta eps2} sin^2(t-) + e^{-beta eps3} sin^2(t+)) / Z
    rho14 = (e^{-beta eps2} sin(2t-) + e^{-beta eps3} sin(2t+)) / (2Z)
    rho22 = (e^{-beta eps1} + e^{-beta eps4}) / (2Z)
    rho23 = (e^{-beta eps1} - e^{-beta eps4}) / (2Z)
    rho44 = (e^{-beta eps2} cos^2(t-) + e^{-beta eps3} cos^2(t+)) / Z

with t+- the mixing angles and Z = 2cosh(beta Delta) + 2cosh(beta Omega).

Numerics: every Boltzmann factor is scaled by e^{-beta Omega} (the ground
weight) so all exponentials carry non-positive arguments; beta*Omega ~ 1e4
occurs in the physical regimes and would otherwise overflow.  The angle
functions are evaluated through the exact identities

    sin(2 t+) = Delta/Omega      cos(2 t+) = w/Omega      t- = t+ - pi/2

which keep rho14 (and rho23) exactly zero when Delta = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Eigensystem, ModelParams, UnitMode, eigensystem

# Below this temperature (natural units / Kelvin) the T = 0 path is used;
# log-spaced sweep grids otherwise hit denormal-float artifacts.
T_FLOOR = 1e-30


@dataclass(frozen=True)
class ThermalState:
    """The five independent X-state elements at one temperature.

    z is the true partition function 2cosh(beta Delta) + 2cosh(beta Omega);
    it overflows to inf once beta*Omega exceeds ~710 (and at T = 0), while
    the elements themselves stay finite through the scaled evaluation.
    beta is 1/temperature (energies are per-k_B in PHYSICAL mode, so this is
    the factor multiplying stored energies in either mode); it is inf on the
    T = 0 path.  ground_degenerate flags the w = 0 limit where the ground
    level is twofold degenerate and the T = 0 state is the equal mixture of
    both ground eigenstates rather than a pure projector.
    """

    rho11: float
    rho14: float
    rho22: float
    rho23: float
    rho44: float
    z: float
    temperature: float
    beta: float
    unit_mode: UnitMode = UnitMode.NATURAL
    ground_degenerate: bool = False

    def as_matrix(self):
        """Dense 4x4 X-shaped matrix (numpy), for oracle comparisons."""
        import numpy as np

        return np.array(
            [
                [self.rho11, 0.0, 0.0, self.rho14],
                [0.0, self.rho22, self.rho23, 0.0],
                [0.0, self.rho23, self.rho22, 0.0],
                [self.rho14, 0.0, 0.0, self.rho44],
            ]
        )

    def trace(self) -> float:
        return self.rho11 + 2.0 * self.rho22 + self.rho44

    def purity(self) -> float:
        """Tr(rho^2); 1 only for the pure T = 0 state."""
        return (
            self.rho11 * self.rho11
            + 2.0 * self.rho22 * self.rho22
            + self.rho44 * self.rho44
            + 2.0 * self.rho14 * self.rho14
            + 2.0 * self.rho23 * self.rho23
        )


def partition_function(eig: Eigensystem, temperature: float) -> float:
    """Z = sum_k e^{-beta eps_k} = 2cosh(beta Delta) + 2cosh(beta Omega).

    Requires temperature > 0 (the T = 0 state is handled by thermal_state
    directly).  Overflows to inf for beta*Omega beyond float range.
    """
    if not (temperature > 0.0) or not math.isfinite(temperature):
        raise ValueError(f"temperature must be > 0 and finite, got {temperature}")
    beta = 1.0 / temperature
    try:
        # eps4 = Delta and omega = Omega by construction
        return 2.0 * math.cosh(beta * eig.eps4) + 2.0 * math.cosh(beta * eig.omega)
    except OverflowError:
        return math.inf


def _ground_state_elements(w: float, delta: float, omega: float):
    """T = 0 elements.  Pure projector onto the outer-block ground state for
    w > 0; equal mixture of the two degenerate ground eigenstates for w = 0."""
    if w == 0.0:
        # eps3 = eps1: outer phi3 (theta+ = pi/4) and inner Bell state share
        # the ground energy -Delta (for delta = 0 every level is degenerate
        # and the limit is the maximally mixed state).
        if delta == 0.0:
            return (0.25, 0.0, 0.25, 0.0, 0.25), True
        return (0.25, 0.25, 0.25, 0.25, 0.25), True
    cos2 = w / omega
    sin2 = delta / omega
    return (
        0.5 * (1.0 - cos2),  # sin^2 t+
        0.5 * sin2,  # sin t+ cos t+
        0.0,
        0.0,
        0.5 * (1.0 + cos2),  # cos^2 t+
    ), False


def thermal_state(params: ModelParams, temperature: float) -> ThermalState:
    """Exact Gibbs state of (w, delta) at the given temperature.

    temperature >= 0; values below T_FLOOR are evaluated on the T = 0 path.
    """
    if not math.isfinite(temperature):
        raise ValueError(f"temperature must be finite, got {temperature!r}")
    if temperature < 0.0:
        raise ValueError(f"temperature must be >= 0, got {temperature}")

    w, delta = params.w, params.delta
    eig = eigensystem(params)
    omega = eig.omega

    if temperature < T_FLOOR:
        (r11, r14, r22, r23, r44), degenerate = _ground_state_elements(w, delta, omega)
        return ThermalState(
            rho11=r11,
            rho14=r14,
            rho22=r22,
            rho23=r23,
            rho44=r44,
            z=math.inf,
            temperature=temperature,
            beta=math.inf,
            unit_mode=params.unit_mode,
            ground_degenerate=degenerate,
        )

    beta = 1.0 / temperature
    if omega == 0.0:
        cos2p, sin2p = 1.0, 0.0  # theta+ -> 0 limit; state is I/4 anyway
    else:
        cos2p = w / omega
        sin2p = delta / omega
    sin_sq_p = 0.5 * (1.0 - cos2p)
    cos_sq_p = 0.5 * (1.0 + cos2p)
    # theta- = theta+ - pi/2: swaps sin^2/cos^2 and negates sin(2 theta)
    sin_sq_m, cos_sq_m = cos_sq_p, sin_sq_p
    sin2m = -sin2p

    # Boltzmann weights relative to the ground level eps3 = -Omega; all
    # exponents are <= 0, so nothing overflows however small T gets.
    w1 = math.exp(-beta * (omega - delta))  # eps1 = -Delta
    w2 = math.exp(-2.0 * beta * omega)  # eps2 = +Omega
    w3 = 1.0  # eps3 = -Omega
    w4 = math.exp(-beta * (omega + delta))  # eps4 = +Delta
    zs = w1 + w2 + w3 + w4

    return ThermalState(
        rho11=(w2 * sin_sq_m + w3 * sin_sq_p) / zs,
        rho14=(w2 * sin2m + w3 * sin2p) / (2.0 * zs),
        rho22=(w1 + w4) / (2.0 * zs),
        rho23=(w1 - w4) / (2.0 * zs),
        rho44=(w2 * cos_sq_m + w3 * cos_sq_p) / zs,
        z=partition_function(eig, temperature),
        temperature=temperature,
        beta=beta,
        unit_mode=params.unit_mode,
    )

"""Model parameters and exact eigensystem of two gravitationally coupled cat states.

Each massive particle sits in a double-well potential and is truncated to its
two lowest levels, so the pair forms two qubits coupled only through the
Newtonian interaction.  The Hamiltonian is

    H = (w/2) (sigma_z x I + I x sigma_z) - Delta (sigma_x x sigma_x)

with w the single-particle level splitting and Delta the gravitational
coupling energy.  In the standard product basis (ordered so that H is
diag(w, 0, 0, -w) plus -Delta on the anti-diagonal) the spectrum is

    eps1 = -Delta          (Bell-like state in the inner block)
    eps2 = +Omega
    eps3 = -Omega          (ground state for w > 0)
    eps4 = +Delta

with Omega = sqrt(w^2 + Delta^2), and the outer-block (antidiagonal)
eigenstates mix through the angles theta_pm = arctan(Delta / (w +- Omega)).

Two unit conventions are supported: Natural (k_B = 1, all quantities
dimensionless) and Physical (energies stored as E/k_B in Kelvin, temperatures
in Kelvin).  Both share the same arithmetic; the mode only fixes how inputs
and outputs are to be read.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# CODATA 2018 defaults; overridable per setup.
G_NEWTON = 6.67430e-11  # m^3 kg^-1 s^-2
K_BOLTZMANN = 1.380649e-23  # J K^-1


class UnitMode(Enum):
    NATURAL = "natural"  # k_B = 1, dimensionless energies and temperatures
    PHYSICAL = "physical"  # energies stored as E/k_B in Kelvin


class DeltaConvention(Enum):
    """How the coupling is assembled from alpha = G m^2 and the distances d, d'.

    PAPER_TEXT carries the prefactor 1/2; PAPER_NUMBERS drops it.  The
    published numerical values (Delta/k_B = 0.5101e-6 K and 17.0072 K) match
    the formula without the 1/2, so PAPER_NUMBERS is the default.
    """

    PAPER_TEXT = "paper-text"  # Delta = (alpha/2) (1/d - 1/d')
    PAPER_NUMBERS = "paper-numbers"  # Delta = alpha (1/d - 1/d')


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class ModelParams:
    """Abstract two-qubit model: level splitting w and coupling delta.

    Both are energies (or Kelvin equivalents E/k_B in PHYSICAL mode) and must
    be non-negative; only that quadrant is physical here.
    """

    w: float
    delta: float
    unit_mode: UnitMode = UnitMode.NATURAL

    def __post_init__(self) -> None:
        _require_finite("w", self.w)
        _require_finite("delta", self.delta)
        if self.w < 0:
            raise ValueError(f"w must be >= 0, got {self.w}")
        if self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")


@dataclass(frozen=True)
class PhysicalSetup:
    """Laboratory description: equal masses in two double wells.

    d is the separation when both particles occupy like-side minima, L the
    distance between the minima of one well, so the cross distance is
    d' = sqrt(d^2 + L^2).  The splitting w is not derivable from this
    geometry and must be supplied as w/k_B in Kelvin.
    """

    mass: float  # kg
    d: float  # m
    L: float  # m
    w_over_kB: float  # K
    G: float = G_NEWTON
    k_B: float = K_BOLTZMANN
    delta_convention: DeltaConvention = DeltaConvention.PAPER_NUMBERS

    def __post_init__(self) -> None:
        for name in ("mass", "d", "L", "w_over_kB", "G", "k_B"):
            _require_finite(name, getattr(self, name))
        if self.mass < 0:
            raise ValueError(f"mass must be >= 0, got {self.mass}")
        if self.d <= 0:
            raise ValueError(f"d must be > 0, got {self.d}")
        if self.L <= 0:
            raise ValueError(f"L must be > 0, got {self.L}")
        if self.w_over_kB < 0:
            raise ValueError(f"w_over_kB must be >= 0, got {self.w_over_kB}")
        if self.G < 0:
            raise ValueError(f"G must be >= 0, got {self.G}")
        if self.k_B <= 0:
            raise ValueError(f"k_B must be > 0, got {self.k_B}")

    @property
    def d_prime(self) -> float:
        """Cross distance sqrt(d^2 + L^2); always > d."""
        return math.hypot(self.d, self.L)

    @property
    def alpha(self) -> float:
        """Gravitational energy scale alpha = G m^2 (J m)."""
        return self.G * self.mass * self.mass


@dataclass(frozen=True)
class Eigensystem:
    """Spectrum and mixing angles of the coupled pair.

    eps2/eps3 = +-Omega belong to the outer (antidiagonal) block, whose
    eigenstates mix the end basis states through theta_pm; eps1/eps4 = -+Delta
    belong to the inner block with temperature-independent Bell-like states.
    """

    eps1: float
    eps2: float
    eps3: float
    eps4: float
    omega: float
    theta_plus: float
    theta_minus: float


def eigensystem(params: ModelParams) -> Eigensystem:
    """Exact eigenvalues and mixing angles for (w, delta).

    Total on the valid parameter domain.  theta_minus has a removable
    singularity at delta = 0 (the arctan argument delta/(w - Omega) is 0/0);
    it is defined there by its limit -pi/2.  For delta > 0 the identity
    delta/(w - Omega) = -(w + Omega)/delta is used, which avoids the
    catastrophic cancellation in w - Omega when delta << w.
    """
    w, delta = params.w, params.delta
    omega = math.hypot(w, delta)
    # atan2 handles w = delta = 0 (returns 0, the delta->0 limit).
    theta_plus = math.atan2(delta, w + omega)
    if delta == 0.0:
        theta_minus = -0.5 * math.pi
    else:
        theta_minus = -math.atan((w + omega) / delta)
    return Eigensystem(
        eps1=-delta,
        eps2=omega,
        eps3=-omega,
        eps4=delta,
        omega=omega,
        theta_plus=theta_plus,
        theta_minus=theta_minus,
    )


def params_from_physical(setup: PhysicalSetup) -> ModelParams:
    """Map a laboratory setup onto (w, Delta) in PHYSICAL units (Kelvin).

    Delta = alpha (1/d - 1/d') under PAPER_NUMBERS, half that under
    PAPER_TEXT, then divided by k_B.  Geometry guarantees d' > d, hence
    Delta >= 0.  Invalid geometry is rejected at PhysicalSetup construction.
    """
    inv_gap = 1.0 / setup.d - 1.0 / setup.d_prime
    delta_joule = setup.alpha * inv_gap
    if setup.delta_convention is DeltaConvention.PAPER_TEXT:
        delta_joule *= 0.5
    return ModelParams(
        w=setup.w_over_kB,
        delta=delta_joule / setup.k_B,
        unit_mode=UnitMode.PHYSICAL,
    )

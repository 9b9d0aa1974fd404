import math

import numpy as np
import pytest

from gravcats.model import (
    DeltaConvention,
    ModelParams,
    PhysicalSetup,
    UnitMode,
    eigensystem,
    params_from_physical,
)

SQRT2 = math.sqrt(2.0)


def test_decoupled_limit():
    eig = eigensystem(ModelParams(w=1.0, delta=0.0))
    assert eig.omega == 1.0
    assert (eig.eps1, eig.eps2, eig.eps3, eig.eps4) == (0.0, 1.0, -1.0, 0.0)
    assert eig.theta_plus == 0.0
    assert eig.theta_minus == -0.5 * math.pi


def test_symmetric_point_spectrum():
    eig = eigensystem(ModelParams(w=3.0, delta=3.0))
    assert eig.omega == pytest.approx(3.0 * SQRT2, rel=1e-15)
    assert eig.eps1 == -3.0 and eig.eps4 == 3.0
    assert eig.eps2 == -eig.eps3 == eig.omega
    assert eig.omega**2 == pytest.approx(eig.eps4**2 + 9.0, rel=1e-14)


def test_symmetric_point_ground_state():
    # ground eigenstate (|11> + (1+sqrt2)|00>)/(sqrt2 sqrt(2+sqrt2)) up to sign
    eig = eigensystem(ModelParams(w=3.0, delta=3.0))
    norm = SQRT2 * math.sqrt(2.0 + SQRT2)
    assert math.sin(eig.theta_plus) == pytest.approx(1.0 / norm, rel=1e-14)
    assert math.cos(eig.theta_plus) == pytest.approx((1.0 + SQRT2) / norm, rel=1e-14)


def test_eigenvalues_traceless_and_ordered():
    rng = np.random.default_rng(7)
    for _ in range(200):
        w = 10.0 ** rng.uniform(-3, 3)
        delta = w * 10.0 ** rng.uniform(-3, 3)
        eig = eigensystem(ModelParams(w=w, delta=delta))
        # traceless: the spectrum consists of exact +- pairs
        assert math.fsum((eig.eps1, eig.eps2, eig.eps3, eig.eps4)) == 0.0
        assert eig.eps3 <= eig.eps1 <= eig.eps4 <= eig.eps2
        assert eig.omega >= max(w, delta)
        assert eig.omega**2 == pytest.approx(w * w + delta * delta, rel=1e-14)


def test_mixing_angle_identities():
    rng = np.random.default_rng(8)
    for _ in range(200):
        w = 10.0 ** rng.uniform(-2, 2)
        delta = w * 10.0 ** rng.uniform(-2, 2)
        eig = eigensystem(ModelParams(w=w, delta=delta))
        assert math.tan(eig.theta_plus) == pytest.approx(
            delta / (w + eig.omega), rel=1e-12
        )
        # tan(t+) tan(t-) = -1 (orthogonal outer-block eigenstates)
        assert math.tan(eig.theta_plus) * math.tan(eig.theta_minus) == pytest.approx(
            -1.0, rel=1e-12
        )


def test_scale_covariance():
    base = eigensystem(ModelParams(w=1.3, delta=0.7))
    for c in (1e-6, 3.0, 1e6):
        scaled = eigensystem(ModelParams(w=c * 1.3, delta=c * 0.7))
        for name in ("eps1", "eps2", "eps3", "eps4", "omega"):
            assert getattr(scaled, name) == pytest.approx(
                c * getattr(base, name), rel=1e-14
            )
        assert scaled.theta_plus == pytest.approx(base.theta_plus, rel=1e-14)
        assert scaled.theta_minus == pytest.approx(base.theta_minus, rel=1e-14)


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(w=-1.0, delta=0.0)
    with pytest.raises(ValueError):
        ModelParams(w=1.0, delta=-0.1)
    with pytest.raises(ValueError):
        ModelParams(w=math.nan, delta=0.0)
    with pytest.raises(ValueError):
        ModelParams(w=math.inf, delta=0.0)


MARLETTO = PhysicalSetup(mass=1e-12, d=1e-6, L=0.5e-6, w_over_kB=0.015)
KRISNANDA = PhysicalSetup(mass=1e-7, d=3e-4, L=1.5e-4, w_over_kB=0.015)


def test_marletto_mapping():
    params = params_from_physical(MARLETTO)
    assert params.unit_mode is UnitMode.PHYSICAL
    assert params.w == 0.015
    # frozen 30-digit evaluation of alpha (1/d - 1/d')/k_B
    assert params.delta == pytest.approx(5.1035751962248294e-07, rel=1e-14)
    assert params.delta == pytest.approx(0.5101e-6, rel=1e-3)  # published value


def test_krisnanda_mapping():
    params = params_from_physical(KRISNANDA)
    assert params.delta == pytest.approx(17.011917320749431, rel=1e-14)
    assert params.delta == pytest.approx(17.0072, rel=1e-3)  # published value


def test_paper_text_convention_is_half():
    full = params_from_physical(MARLETTO)
    setup = PhysicalSetup(
        mass=1e-12,
        d=1e-6,
        L=0.5e-6,
        w_over_kB=0.015,
        delta_convention=DeltaConvention.PAPER_TEXT,
    )
    assert params_from_physical(setup).delta == pytest.approx(
        0.5 * full.delta, rel=1e-15
    )


def test_zero_mass_decouples():
    setup = PhysicalSetup(mass=0.0, d=1e-6, L=1e-6, w_over_kB=0.015)
    assert params_from_physical(setup).delta == 0.0


def test_geometry_invariants():
    rng = np.random.default_rng(9)
    for _ in range(100):
        d = 10.0 ** rng.uniform(-7, -2)
        L = d * 10.0 ** rng.uniform(-2, 2)
        setup = PhysicalSetup(mass=1e-10, d=d, L=L, w_over_kB=0.015)
        assert setup.d_prime > setup.d
        assert params_from_physical(setup).delta >= 0.0


def test_physical_setup_validation():
    with pytest.raises(ValueError):
        PhysicalSetup(mass=1e-12, d=0.0, L=1e-6, w_over_kB=0.015)
    with pytest.raises(ValueError):
        PhysicalSetup(mass=1e-12, d=1e-6, L=-1e-6, w_over_kB=0.015)
    with pytest.raises(ValueError):
        PhysicalSetup(mass=-1e-12, d=1e-6, L=1e-6, w_over_kB=0.015)
    with pytest.raises(ValueError):
        PhysicalSetup(mass=1e-12, d=1e-6, L=1e-6, w_over_kB=0.015, k_B=0.0)

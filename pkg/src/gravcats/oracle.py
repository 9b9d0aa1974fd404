"""Brute-force reference path for validating every closed-form result.

Everything here deliberately avoids the closed forms used elsewhere: the
Hamiltonian is assembled from Pauli tensor products, the Gibbs state comes
from a full symmetric eigendecomposition, and the concurrence follows the
generic two-qubit recipe (square roots of the eigenvalues of rho rho~).
All operators of this model are real in the standard basis - including
sigma_y x sigma_y, which is antidiag(-1, 1, 1, -1) - so the whole module
works in real arithmetic.

The eigensolver is a cyclic Jacobi sweep, which is simple and fully adequate
at 4x4.  The eigenvalues of the non-symmetric product R = rho * rho~ are
obtained through the similar symmetric matrix sqrt(rho) * rho~ * sqrt(rho),
so no general eigensolver is ever needed.
"""

from __future__ import annotations

import math

import numpy as np

from .model import ModelParams

Matrix4 = np.ndarray  # 4x4, float64

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
# sigma_y x sigma_y is real even though sigma_y is not.
SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)

# Jacobi stops when the off-diagonal Frobenius norm drops below this fraction
# of the matrix norm (an absolute 1e-14 would be unreachable for large |H|).
_JACOBI_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 100
_PSD_EIG_FLOOR = -1e-10


def build_hamiltonian(params: ModelParams) -> Matrix4:
    """H = (w/2)(sigma_z x I + I x sigma_z) - delta (sigma_x x sigma_x)."""
    eye = np.eye(2)
    h = 0.5 * params.w * (np.kron(SIGMA_Z, eye) + np.kron(eye, SIGMA_Z))
    h -= params.delta * np.kron(SIGMA_X, SIGMA_X)
    return h


def sym_eigen(m: Matrix4) -> tuple[np.ndarray, Matrix4]:
    """Eigendecomposition of a symmetric 4x4 matrix by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvectors as columns).  Rejects
    asymmetric input.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    scale = max(1.0, float(np.abs(m).max()))
    if float(np.abs(m - m.T).max()) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")

    a = 0.5 * (m + m.T)  # symmetrize rounding dust
    v = np.eye(4)
    norm = float(np.linalg.norm(a))
    tol = _JACOBI_TOL * max(norm, np.finfo(float).tiny)
    for _ in range(_JACOBI_MAX_SWEEPS):
        # summed directly over off-diagonal entries: the textbook
        # ||A||^2 - ||diag||^2 form cancels catastrophically near convergence
        off = math.sqrt(
            sum(a[i, j] * a[i, j] for i in range(4) for j in range(4) if i != j)
        )
        if off <= tol:
            break
        for p in range(3):
            for q in range(p + 1, 4):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # classic two-sided rotation annihilating a[p, q]
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                a[p, q] = a[q, p] = 0.0
                rot_p = c * v[:, p] - s * v[:, q]
                rot_q = s * v[:, p] + c * v[:, q]
                v[:, p], v[:, q] = rot_p, rot_q

    eigvals = np.diag(a).copy()
    order = np.argsort(eigvals, kind="stable")
    return eigvals[order], v[:, order]


def gibbs_state(h: Matrix4, temperature: float) -> Matrix4:
    """rho = exp(-H/T) / Tr[exp(-H/T)] via eigendecomposition.

    The spectrum is shifted by its minimum before exponentiating, so large
    1/T never overflows (weights underflow to 0 instead).
    """
    if not (temperature > 0.0) or not math.isfinite(temperature):
        raise ValueError(f"temperature must be > 0 and finite, got {temperature}")
    eigvals, vecs = sym_eigen(h)
    weights = np.exp(-(eigvals - eigvals[0]) / temperature)
    weights /= weights.sum()
    return (vecs * weights) @ vecs.T


def sqrtm_psd(rho: Matrix4) -> Matrix4:
    """Symmetric PSD square root; eigenvalues in [-1e-10, 0) are clamped to 0."""
    eigvals, vecs = sym_eigen(rho)
    if eigvals[0] < _PSD_EIG_FLOOR:
        raise ValueError(f"matrix is not PSD (min eigenvalue {eigvals[0]:.3e})")
    roots = np.sqrt(np.clip(eigvals, 0.0, None))
    return (vecs * roots) @ vecs.T


def wootters_concurrence(rho: Matrix4) -> float:
    """Generic two-qubit concurrence max(sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4), 0).

    The l_i are the (descending) eigenvalues of R = rho * rho~ with
    rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y); for this real model
    rho* = rho.  R is not symmetric, but it shares its spectrum with the PSD
    matrix S = sqrt(rho) rho~ sqrt(rho), and S is the square of the symmetric
    M = sqrt(rho) (sigma_y x sigma_y) sqrt(rho).  The sqrt(l_i) are therefore
    the |eigenvalues| of M - computing them that way instead of square-rooting
    eigenvalues of S keeps full precision when the l_i underflow toward zero
    (sqrt turns O(eps) eigenvalue noise into O(sqrt(eps)) otherwise).
    """
    rho = np.asarray(rho, dtype=float)
    root = sqrtm_psd(rho)  # also rejects non-PSD input
    m = root @ SIGMA_YY @ root
    eigvals, _ = sym_eigen(0.5 * (m + m.T))
    lams = np.sort(np.abs(eigvals))[::-1]
    return max(lams[0] - lams[1] - lams[2] - lams[3], 0.0)

"""Finite-dimensional realizations of Schur-class functions on the bidisc.

A colligation packages a unitary operator

    L = [ a   beta* ]
        [ gamma  D  ]

on C (+) M together with a Hermitian projection P1 splitting M.  The point
``lam`` of the bidisc acts on M as ``lam_1 P1 + lam_2 (1 - P1)`` and the
realized function is

    phi(lam) = a + < I(lam) (1 - D I(lam))^{-1} gamma, beta >,

a Schur-class function whenever L is unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    IllConditionedError,
    InternalInconsistencyError,
    InvalidInputError,
    NotAnIsometryError,
)
from .linalg import DEFAULT_TOLERANCES, Tolerances
from .points import as_point, require_interior

__all__ = [
    "Colligation",
    "eval_phi",
    "model_vector",
    "model_residual",
    "unitary_extension",
    "phi_evaluator",
]


@dataclass(frozen=True)
class Colligation:
    """Realization data (a, beta, gamma, D) with the coordinate projection P1.

    Construction only checks shapes and finiteness; ``validate`` measures the
    structural invariants (L unitary, P1 a Hermitian projection) so that
    deliberately broken instances can still be built for negative tests.
    """

    a: complex
    beta: np.ndarray
    gamma: np.ndarray
    D: np.ndarray
    P1: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        beta = linalg.as_vector(self.beta, "beta")
        gamma = linalg.as_vector(self.gamma, "gamma")
        D = linalg.as_matrix(self.D, "D")
        P1 = linalg.as_matrix(self.P1, "P1")
        n = beta.shape[0]
        if gamma.shape[0] != n or D.shape != (n, n) or P1.shape != (n, n):
            raise InvalidInputError("beta, gamma, D and P1 must share one dimension")
        for name, value in (("beta", beta), ("gamma", gamma), ("D", D), ("P1", P1)):
            object.__setattr__(self, name, value)

    @property
    def dim(self) -> int:
        return self.beta.shape[0]

    @property
    def L(self) -> np.ndarray:
        """The block operator [[a, beta*], [gamma, D]] on C (+) M."""
        n = self.dim
        L = np.zeros((n + 1, n + 1), dtype=complex)
        L[0, 0] = self.a
        L[0, 1:] = self.beta.conj()
        L[1:, 0] = self.gamma
        L[1:, 1:] = self.D
        return L

    def pencil(self, lam) -> np.ndarray:
        """The operator ``lam_1 P1 + lam_2 (1 - P1)`` on M."""
        l1, l2 = as_point(lam)
        return l1 * self.P1 + l2 * (np.eye(self.dim) - self.P1)

    def structural_residuals(self) -> dict[str, float]:
        return {
            "unitary": linalg.structure_check(self.L, "unitary").residual,
            "projection": linalg.structure_check(self.P1, "projection").residual,
            "hermitian": linalg.structure_check(self.P1, "hermitian").residual,
        }

    def validate(self, tol: Tolerances = DEFAULT_TOLERANCES) -> dict[str, float]:
        """Check the structural invariants, raising on violation."""
        residuals = self.structural_residuals()
        bad = {k: v for k, v in residuals.items() if v > tol.structural}
        if bad:
            raise InvalidInputError(f"colligation fails structural checks: {bad}")
        return residuals


def _resolve_model_vector(c: Colligation, lam, tol: Tolerances):
    """Solve (1 - D I(lam)) u = gamma, guarding the condition number."""
    lam = require_interior(lam)
    I_lam = c.pencil(lam)
    M = np.eye(c.dim) - c.D @ I_lam
    cond = np.linalg.cond(M)
    if not np.isfinite(cond) or cond > tol.solve_cond_max:
        raise IllConditionedError(
            f"resolvent condition number {cond:.3e} at {lam}; "
            "the point is too close to a singularity",
            cond,
        )
    u = np.linalg.solve(M, c.gamma)
    return I_lam, u


def eval_phi(c: Colligation, lam, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Evaluate the realized function at an interior point."""
    I_lam, u = _resolve_model_vector(c, lam, tol)
    return complex(c.a + np.vdot(c.beta, I_lam @ u))


def model_vector(c: Colligation, lam, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """The vector u_lam = (1 - D I(lam))^{-1} gamma of the realized model."""
    _, u = _resolve_model_vector(c, lam, tol)
    return u


def model_residual(c: Colligation, lam, mu, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Deviation in the model identity at a pair of interior points.

    Returns |1 - conj(phi(mu)) phi(lam) - <(1 - I(mu)* I(lam)) u_lam, u_mu>|,
    which vanishes (to rounding) for a unitary colligation.
    """
    I_lam, u_lam = _resolve_model_vector(c, lam, tol)
    I_mu, u_mu = _resolve_model_vector(c, mu, tol)
    phi_lam = c.a + np.vdot(c.beta, I_lam @ u_lam)
    phi_mu = c.a + np.vdot(c.beta, I_mu @ u_mu)
    lhs = 1.0 - np.conj(phi_mu) * phi_lam
    rhs = np.vdot(u_mu, u_lam) - np.vdot(I_mu @ u_mu, I_lam @ u_lam)
    return float(abs(lhs - rhs))


def unitary_extension(domain_vecs, range_vecs,
                      tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Extend the map domain column -> range column to a unitary matrix.

    The columns must satisfy the lurking-isometry condition: equal Gramians.
    Since equal Gramians force equal ranks, the two orthocomplements have the
    same dimension and no ambient enlargement is ever needed; the returned
    matrix is square of the common row count.  The completion on the
    orthocomplement is an arbitrary unitary pairing, so only the action on
    the given columns (and derived function values) is contractual.
    """
    D = linalg.as_matrix(domain_vecs, "domain_vecs")
    R = linalg.as_matrix(range_vecs, "range_vecs")
    if D.shape != R.shape:
        raise InvalidInputError("domain and range must have identical shapes")
    gram_d = D.conj().T @ D
    gram_r = R.conj().T @ R
    deviation = float(np.linalg.norm(gram_d - gram_r, 2))
    scale = max(1.0, float(np.linalg.norm(gram_d, 2)))
    if deviation > tol.structural * scale:
        raise NotAnIsometryError(
            f"gramian mismatch {deviation:.3e} exceeds {tol.structural * scale:.3e}",
            deviation,
        )
    n = D.shape[0]
    u, s, vh = np.linalg.svd(D)
    rank = int(np.sum(s > tol.rank_rel * s[0])) if s.size and s[0] > 0 else 0
    if rank == 0:
        return np.eye(n, dtype=complex)
    Qd = u[:, :rank]
    Cd = u[:, rank:]
    # Images of the orthonormal domain basis under the isometry; the equal
    # Gramians make these orthonormal up to rounding, and the polar factor
    # snaps them back onto an exact isometry.
    P = R @ (vh[:rank].conj().T / s[:rank])
    w, _, zh = np.linalg.svd(P, full_matrices=False)
    P_iso = w @ zh
    Cr = linalg.null_space(P_iso.conj().T, tol)
    if Cr.shape[1] != Cd.shape[1]:
        raise InternalInconsistencyError(
            "domain and range complements have different dimensions"
        )
    U = P_iso @ Qd.conj().T + Cr @ Cd.conj().T
    map_residual = float(np.abs(U @ D - R).max())
    if map_residual > 100 * tol.structural * max(1.0, float(np.abs(R).max())):
        raise InternalInconsistencyError(
            f"extension fails to reproduce the range columns ({map_residual:.3e})"
        )
    return U


def phi_evaluator(c: Colligation, tol: Tolerances = DEFAULT_TOLERANCES):
    """Wrap a colligation as a plain ``lam -> phi(lam)`` callable."""

    def phi(lam):
        return eval_phi(c, lam, tol)

    return phi

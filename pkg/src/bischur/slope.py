"""Slope functions at carapoints.

Every carapoint of a Schur function on the bidisc carries a slope function

    h(z) = - < (1 - Y + z Y)^{-1} u_tau, u_tau >

built from the desingularized model data (Y, u_tau); it encodes all
directional derivatives through

    D_{-delta} phi(tau) = phi(tau) conj(tau_2) delta_2
                          h( conj(tau_2) delta_2 / (conj(tau_1) delta_1) ).

Both h and -z h(z) lie in the Pick class, h is real on (0, inf), and
h(1) = -||u_tau||^2 equals minus the Caratheodory liminf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import boundary
from ._limits import LimitReport, refine_to_limit
from .errors import DomainError, InvalidInputError
from .linalg import as_matrix, as_vector
from .points import as_point
from .representations import DiscreteMeasure01

__all__ = [
    "SlopePair",
    "slope_eval",
    "slope_evaluator",
    "slope_measure",
    "require_inward",
    "directional_derivative_analytic",
    "directional_derivative_numeric",
    "pick_check",
    "slope_real_axis_check",
    "PickReport",
    "RealAxisReport",
]


@dataclass(frozen=True)
class SlopePair:
    """A positive contraction Y together with the boundary vector u_tau."""

    Y: np.ndarray
    u_tau: np.ndarray

    def __post_init__(self):
        Y = as_matrix(self.Y, "Y")
        u = as_vector(self.u_tau, "u_tau")
        if Y.shape[0] != Y.shape[1] or Y.shape[0] != u.shape[0]:
            raise InvalidInputError("Y must be square and match u_tau")
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "u_tau", u)

    @classmethod
    def from_realization(cls, g) -> "SlopePair":
        """Extract (Y, u_tau) from a desingularized realization."""
        return cls(g.Y, g.u_tau)

    @classmethod
    def from_measure(cls, nu: DiscreteMeasure01) -> "SlopePair":
        """Diagonal operator model of an atomic measure: Y = diag(s_i),
        u_tau = (sqrt(w_i))."""
        if not nu.atoms:
            return cls(np.zeros((1, 1)), np.zeros(1))
        s = np.array([loc for loc, _ in nu.atoms], dtype=float)
        w = np.array([wt for _, wt in nu.atoms], dtype=float)
        return cls(np.diag(s).astype(complex), np.sqrt(w).astype(complex))


def slope_eval(pair: SlopePair, z) -> complex:
    """Evaluate h(z) = -<(1 - Y + z Y)^{-1} u_tau, u_tau> off the cut."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise DomainError(f"slope functions are undefined on the cut (-inf, 0]; got {z}")
    n = pair.Y.shape[0]
    M = np.eye(n) + (z - 1.0) * pair.Y
    x = np.linalg.solve(M, pair.u_tau)
    return complex(-np.vdot(pair.u_tau, x))


def slope_evaluator(pair: SlopePair):
    return lambda z: slope_eval(pair, z)


def slope_measure(pair: SlopePair, cluster_tol: float = 1e-8) -> DiscreteMeasure01:
    """Spectral measure of the slope pair: eigenvalues of Y with weights
    |<u_tau, e_i>|^2, eigenvalues clustered within ``cluster_tol``."""
    eigs, vecs = np.linalg.eigh(0.5 * (pair.Y + pair.Y.conj().T))
    weights = np.abs(vecs.conj().T @ pair.u_tau) ** 2
    atoms: list[tuple[float, float]] = []
    for s, w in zip(eigs, weights):
        s = min(max(float(s), 0.0), 1.0)
        if atoms and abs(s - atoms[-1][0]) <= cluster_tol:
            atoms[-1] = (atoms[-1][0], atoms[-1][1] + float(w))
        else:
            atoms.append((s, float(w)))
    return DiscreteMeasure01(tuple((s, w) for s, w in atoms if w > 1e-14))


def require_inward(delta, tau) -> tuple[complex, complex]:
    """Check that delta points into the bidisc at the torus point tau."""
    delta = as_point(delta)
    tau = as_point(tau)
    if any((np.conj(t) * d).real <= 0 for t, d in zip(tau, delta)):
        raise InvalidInputError(
            f"direction {delta} must satisfy Re(conj(tau_j) delta_j) > 0 at {tau}"
        )
    return delta


def directional_derivative_analytic(phi_tau, tau, delta, pair: SlopePair) -> complex:
    """Directional derivative from the slope formula."""
    tau = as_point(tau)
    delta = require_inward(delta, tau)
    w1 = np.conj(tau[0]) * delta[0]
    w2 = np.conj(tau[1]) * delta[1]
    return complex(phi_tau) * w2 * slope_eval(pair, w2 / w1)


def directional_derivative_numeric(phi, tau, delta, steps=None, tol: float = 1e-8,
                                   phi_tau=None) -> tuple[complex, LimitReport]:
    """Difference-quotient estimate of D_{-delta} phi(tau).

    The boundary value phi(tau) is taken from the nontangential limit along
    the same direction unless supplied.  Quotients are extrapolated with one
    elimination step, which removes the O(t) truncation term.
    """
    tau = as_point(tau)
    path = boundary.ApproachPath(tau, delta) if steps is None else \
        boundary.ApproachPath(tau, delta, tuple(steps))
    if phi_tau is None:
        value_report = boundary.nontangential_value(phi, path, tol=1e-11)
        phi_tau = value_report.estimate
    phi_tau = complex(phi_tau)
    report = refine_to_limit(
        lambda t: (complex(phi(path.point(t))) - phi_tau) / t,
        path.steps,
        path.steps,
        tol=tol,
    )
    return report.estimate, report


class PickReport(NamedTuple):
    min_im_h: float
    min_im_neg_zh: float
    passed: bool


def pick_check(h, grid, slack: float = 1e-12) -> PickReport:
    """Minimal imaginary parts of h and -z h(z) on an upper-half-plane grid.

    Slope-type functions keep both nonnegative; the check passes when both
    minima stay above ``-slack``.
    """
    min_h = np.inf
    min_zh = np.inf
    for z in grid:
        z = complex(z)
        if z.imag <= 0:
            raise InvalidInputError("pick_check grid points must have Im z > 0")
        value = complex(h(z))
        min_h = min(min_h, value.imag)
        min_zh = min(min_zh, (-z * value).imag)
    return PickReport(float(min_h), float(min_zh),
                      min_h >= -slack and min_zh >= -slack)


class RealAxisReport(NamedTuple):
    max_abs_im: float
    passed: bool


def slope_real_axis_check(pair: SlopePair, xs, slack: float = 1e-12) -> RealAxisReport:
    """Slope functions are real on (0, inf): largest |Im h(x)| over xs."""
    worst = 0.0
    for x in xs:
        x = float(x)
        if x <= 0:
            raise InvalidInputError("real-axis check points must be positive")
        worst = max(worst, abs(slope_eval(pair, x).imag))
    return RealAxisReport(worst, worst < slack)

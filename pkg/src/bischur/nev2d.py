"""Two-variable Nevanlinna representations via a self-adjoint resolvent.

A function in the two-variable Pick class with a finite-value carapoint at
infinity is exactly one of the form

    h(z) = b - < (B + z1 Y + z2 (1 - Y))^{-1} alpha, alpha >

with b real, B Hermitian and Y a positive contraction.  The data is
extracted from a desingularized Schur realization at (1, 1) through the
Cayley transform J = i (1 + L)(1 - L)^{-1} of the unitary block operator L;
the transform exists precisely when the boundary value of the Schur function
at (1, 1) differs from 1, the obstruction reported otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._limits import refine_to_limit
from .desingularize import GeneralizedRealization, eval_phi_gen
from .errors import (
    DivergenceError,
    DomainError,
    IllConditionedError,
    InternalInconsistencyError,
    InvalidInputError,
    ObstructionError,
)
from .linalg import DEFAULT_TOLERANCES, Tolerances, as_matrix, as_vector, structure_check
from .points import as_point, require_upper_half_plane

__all__ = [
    "TwoVarNevRep",
    "eval_h2",
    "h2_evaluator",
    "carapoint_at_infinity",
    "InfinityCarapoint",
    "to_halfplane",
    "to_bidisc",
    "pick_value_from_schur",
    "schur_value_from_pick",
    "pick_function_from_schur",
    "schur_function_from_pick",
    "cayley_maps",
    "CayleyMaps",
    "rep_from_schur",
    "VERIFICATION_GRID",
]

_GRID_COORDS = (0.5j, 1j, 1 + 1j, -1 + 2j, 3j)
VERIFICATION_GRID = tuple((z1, z2) for z1 in _GRID_COORDS for z2 in _GRID_COORDS)


@dataclass(frozen=True)
class TwoVarNevRep:
    """Resolvent-representation data (b, alpha, B, Y)."""

    b: float
    alpha: np.ndarray
    B: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        b = float(self.b)
        alpha = as_vector(self.alpha, "alpha")
        B = as_matrix(self.B, "B")
        Y = as_matrix(self.Y, "Y")
        m = alpha.shape[0]
        if B.shape != (m, m) or Y.shape != (m, m):
            raise InvalidInputError("alpha, B and Y must share one dimension")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "Y", Y)

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]

    def validate(self, tol: Tolerances = DEFAULT_TOLERANCES) -> dict[str, float]:
        residuals = {
            "hermitian_B": structure_check(self.B, "hermitian", tol).residual,
            "positive_contraction_Y": structure_check(self.Y, "positive_contraction", tol).residual,
        }
        bad = {k: v for k, v in residuals.items() if v > tol.structural}
        if bad:
            raise InvalidInputError(f"representation fails structural checks: {bad}")
        return residuals


def eval_h2(rep: TwoVarNevRep, z, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Evaluate b - <(B + z1 Y + z2 (1 - Y))^{-1} alpha, alpha> on the
    upper half-plane squared."""
    z1, z2 = require_upper_half_plane(z)
    eye = np.eye(rep.dim)
    T = rep.B + z1 * rep.Y + z2 * (eye - rep.Y)
    cond = np.linalg.cond(T)
    if not np.isfinite(cond) or cond > tol.solve_cond_max:
        raise IllConditionedError(
            f"resolvent condition number {cond:.3e} near the real boundary", cond
        )
    return complex(rep.b - np.vdot(rep.alpha, np.linalg.solve(T, rep.alpha)))


def h2_evaluator(rep: TwoVarNevRep, tol: Tolerances = DEFAULT_TOLERANCES):
    return lambda z: eval_h2(rep, z, tol)


class InfinityCarapoint(NamedTuple):
    finite: bool
    limit: float | None
    value: complex | None


def carapoint_at_infinity(h, ys=None, tol: float = 1e-8) -> InfinityCarapoint:
    """Detect a finite-value carapoint at infinity along the diagonal ray.

    Extrapolates y Im h(iy, iy) as y -> infinity; convergence to a finite
    limit is the carapoint condition, and the value is the extrapolated
    h(iy, iy).  Divergence is encoded as ``finite=False``.
    """
    if ys is None:
        ys = [float(2.0 ** k) for k in range(2, 26)]
    ys = [float(y) for y in ys]
    if any(y <= 0 for y in ys) or any(q <= p for p, q in zip(ys, ys[1:])):
        raise InvalidInputError("ys must be positive and strictly increasing")
    try:
        growth = refine_to_limit(
            lambda y: y * complex(h((1j * y, 1j * y))).imag,
            ys,
            [1.0 / (y * y) for y in ys],
            tol=tol,
        )
    except DivergenceError:
        return InfinityCarapoint(False, None, None)
    if not growth.converged:
        return InfinityCarapoint(False, None, None)
    value = refine_to_limit(
        lambda y: complex(h((1j * y, 1j * y))),
        ys,
        [1.0 / y for y in ys],
        tol=tol,
    )
    return InfinityCarapoint(True, float(growth.estimate.real), complex(value.estimate))


def to_halfplane(lam) -> tuple[complex, complex]:
    """Coordinatewise Cayley map z_j = i (1 + lam_j)/(1 - lam_j)."""
    lam = as_point(lam)
    if any(l == 1.0 for l in lam):
        raise DomainError("the Cayley map is singular where a coordinate equals 1")
    return tuple(1j * (1.0 + l) / (1.0 - l) for l in lam)


def to_bidisc(z) -> tuple[complex, complex]:
    """Inverse coordinatewise Cayley map lam_j = (z_j - i)/(z_j + i)."""
    z = as_point(z)
    if any(w == -1j for w in z):
        raise DomainError("the inverse Cayley map is singular at -i")
    return tuple((w - 1j) / (w + 1j) for w in z)


def pick_value_from_schur(w) -> complex:
    w = complex(w)
    if w == 1.0:
        raise DomainError("the value map is singular at 1")
    return 1j * (1.0 + w) / (1.0 - w)


def schur_value_from_pick(v) -> complex:
    v = complex(v)
    if v == -1j:
        raise DomainError("the value map is singular at -i")
    return (v - 1j) / (v + 1j)


def pick_function_from_schur(phi):
    """Turn a Schur-class evaluator on the bidisc into a Pick-class
    evaluator on the upper half-plane squared."""

    def h(z):
        return pick_value_from_schur(phi(to_bidisc(z)))

    return h


def schur_function_from_pick(h):
    def phi(lam):
        return schur_value_from_pick(h(to_halfplane(lam)))

    return phi


class CayleyMaps(NamedTuple):
    point: object
    value: object
    function: object


def cayley_maps(direction: str) -> CayleyMaps:
    """Point, value and function transformers for one Cayley direction.

    ``disc_to_halfplane`` sends bidisc points to half-plane points, Schur
    values to Pick values, and Schur evaluators to Pick evaluators;
    ``halfplane_to_disc`` is the inverse triple.
    """
    if direction == "disc_to_halfplane":
        return CayleyMaps(to_halfplane, pick_value_from_schur, pick_function_from_schur)
    if direction == "halfplane_to_disc":
        return CayleyMaps(to_bidisc, schur_value_from_pick, schur_function_from_pick)
    raise InvalidInputError(f"unknown Cayley direction {direction!r}")


def rep_from_schur(g: GeneralizedRealization,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> TwoVarNevRep:
    """Extract the resolvent representation from a desingularization at (1, 1).

    Assembles L = [[a, beta*], [gamma, Q]], requires it unitary with 1 outside
    its spectrum (otherwise the boundary value is 1 and the representation is
    obstructed), forms the Hermitian Cayley transform J = i (1 + L)(1 - L)^{-1}
    and reads off b, alpha, B from its blocks; Y is inherited from the model.
    The result is verified against the Cayley transform of the realized
    function on a fixed grid.
    """
    tau = as_point(g.tau)
    if abs(tau[0] - 1.0) > 1e-12 or abs(tau[1] - 1.0) > 1e-12:
        raise InvalidInputError(
            "the representation is extracted at the boundary point (1, 1)"
        )
    m = g.dim
    L = np.zeros((m + 1, m + 1), dtype=complex)
    L[0, 0] = g.a
    L[0, 1:] = g.beta.conj()
    L[1:, 0] = g.gamma
    L[1:, 1:] = g.Q
    unitary = structure_check(L, "unitary", tol)
    if not unitary.ok:
        raise InvalidInputError(
            f"the generalized realization is not unitary (residual "
            f"{unitary.residual:.3e}); no Hermitian Cayley transform exists"
        )
    eye = np.eye(m + 1)
    s = np.linalg.svd(eye - L, compute_uv=False)
    if s[-1] <= tol.rank_rel * s[0] or s[0] / s[-1] > tol.solve_cond_max:
        raise ObstructionError(
            "1 lies in the spectrum of the realization: the function has "
            "boundary value 1 at (1, 1) and no finite-value carapoint at "
            "infinity, so the resolvent representation does not exist"
        )
    J = np.linalg.solve(eye - L, 1j * (eye + L))
    herm = float(np.linalg.norm(J - J.conj().T, 2))
    if herm > tol.structural * (1.0 + float(np.linalg.norm(J, 2))):
        raise InternalInconsistencyError(
            f"Cayley transform is not Hermitian (residual {herm:.3e})"
        )
    J = 0.5 * (J + J.conj().T)
    if abs(J[0, 0].imag) > tol.structural * (1.0 + abs(J[0, 0])):
        raise InternalInconsistencyError(
            f"diagonal entry J[0,0] = {J[0, 0]} is not real"
        )
    rep = TwoVarNevRep(b=J[0, 0].real, alpha=J[1:, 0], B=J[1:, 1:], Y=g.Y)
    worst = 0.0
    for z in VERIFICATION_GRID:
        target = pick_value_from_schur(eval_phi_gen(g, to_bidisc(z), tol))
        worst = max(worst, abs(eval_h2(rep, z, tol) - target))
    if worst > 1e-8:
        raise InternalInconsistencyError(
            f"representation mismatches the Cayley transform of the function "
            f"by {worst:.3e} on the verification grid"
        )
    return rep

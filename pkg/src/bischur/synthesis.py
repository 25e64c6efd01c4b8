"""Construction of Schur functions with a prescribed slope function.

Given an atomic positive measure nu on [0, 1], the Herglotz-class function

    f(lam) = sum_i w_i f_{s_i}(lam),
    f_s(lam) = ( s (1+lam1)/(1-lam1) + (1-s) (1+lam2)/(1-lam2) )^{-1},

yields phi = (1 - f)/(1 + f) in the Schur class with a carapoint at (1, 1),
boundary value 1 there, and slope function h(z) = -sum w_i/(1 - s_i + s_i z).
Relocation to an arbitrary torus point tau and unimodular boundary value
omega is the change of variable

    phi_relocated(lam) = omega * phi(conj(tau_1) lam_1, conj(tau_2) lam_2),

which preserves the slope function.

The same Herglotz data gives closed-form model vectors, so a unitary
colligation can be fitted by extending the lurking isometry on sampled
points; this is the constructive route from measures to realizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import boundary, slope as slope_mod
from .colligation import Colligation, eval_phi, unitary_extension
from .errors import InternalInconsistencyError, InvalidInputError, PoleError
from .linalg import DEFAULT_TOLERANCES, Tolerances
from .points import as_point, require_interior, require_torus
from .representations import DiscreteMeasure01, h_from_measure

__all__ = [
    "SynthesizedSchur",
    "herglotz_component",
    "synth_eval",
    "synth_evaluator",
    "synth_model_vector",
    "fit_colligation",
    "verify_slope",
    "verify_carapoint",
    "SlopeVerification",
    "CarapointVerification",
]


@dataclass(frozen=True)
class SynthesizedSchur:
    """A Schur function with slope measure nu at the carapoint tau, where it
    takes the unimodular boundary value omega."""

    nu: DiscreteMeasure01
    tau: tuple[complex, complex] = (1.0 + 0j, 1.0 + 0j)
    omega: complex = 1.0 + 0j

    def __post_init__(self):
        if not isinstance(self.nu, DiscreteMeasure01):
            raise InvalidInputError("nu must be a DiscreteMeasure01")
        tau = require_torus(self.tau)
        omega = complex(self.omega)
        if abs(abs(omega) - 1.0) > 1e-12:
            raise InvalidInputError("omega must be unimodular")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "omega", omega)


def herglotz_component(s: float, lam) -> complex:
    """f_s(lam), the convex-combination Herglotz kernel; Re f_s > 0 inside."""
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise InvalidInputError("the mixing parameter s must lie in [0, 1]")
    l1, l2 = as_point(lam)
    if l1 == 1.0 or l2 == 1.0:
        raise PoleError("herglotz component has a pole where a coordinate equals 1")
    den = s * (1.0 + l1) / (1.0 - l1) + (1.0 - s) * (1.0 + l2) / (1.0 - l2)
    if den == 0:
        raise PoleError(f"herglotz denominator vanishes at {lam}")
    return 1.0 / den


def _herglotz_sum(nu: DiscreteMeasure01, lam) -> complex:
    return sum((w * herglotz_component(s, lam) for s, w in nu.atoms), 0.0 + 0.0j)


def _base_point(syn: SynthesizedSchur, lam):
    l1, l2 = as_point(lam)
    return (np.conj(syn.tau[0]) * l1, np.conj(syn.tau[1]) * l2)


def synth_eval(syn: SynthesizedSchur, lam) -> complex:
    """Evaluate the synthesized Schur function at an interior point."""
    lam = require_interior(lam)
    mu = _base_point(syn, lam)
    f = _herglotz_sum(syn.nu, mu)
    if abs(1.0 + f) < 1e-100:
        raise InternalInconsistencyError(
            "1 + f vanished at an interior point; Re f > 0 should forbid this"
        )
    return complex(syn.omega * (1.0 - f) / (1.0 + f))


def synth_evaluator(syn: SynthesizedSchur):
    return lambda lam: synth_eval(syn, lam)


def synth_model_vector(syn: SynthesizedSchur, lam) -> np.ndarray:
    """Closed-form model vector at lam for the linear-pencil model.

    With N atoms the model space is C^N (+) C^N and

        u^1_i = 2 sqrt(w_i s_i)     f_{s_i}(mu) / ((1 - mu_1)(1 + f(mu))),
        u^2_i = 2 sqrt(w_i (1-s_i)) f_{s_i}(mu) / ((1 - mu_2)(1 + f(mu))),

    where mu = conj(tau) lam coordinatewise; these satisfy the model identity
    for phi, with the first block carrying the coordinate-1 projection.
    """
    lam = require_interior(lam)
    mu = _base_point(syn, lam)
    f = _herglotz_sum(syn.nu, mu)
    atoms = syn.nu.atoms
    u = np.zeros(2 * len(atoms), dtype=complex)
    for i, (s, w) in enumerate(atoms):
        fs = herglotz_component(s, mu)
        common = 2.0 * fs / (1.0 + f)
        u[i] = np.sqrt(w * s) * common / (1.0 - mu[0])
        u[len(atoms) + i] = np.sqrt(w * (1.0 - s)) * common / (1.0 - mu[1])
    return u


def fit_colligation(syn: SynthesizedSchur, n_samples: int | None = None,
                    seed: int = 727, tol: Tolerances = DEFAULT_TOLERANCES) -> Colligation:
    """Fit a unitary colligation reproducing the synthesized function.

    Samples the closed-form model vectors on random interior points and
    extends the isometry (1, I(lam) u_lam) -> (phi(lam), u_lam) to a unitary;
    with enough samples the span is full and the realization is determined on
    it, so the fitted function agrees with the synthesized one everywhere.
    """
    n_atoms = len(syn.nu.atoms)
    if n_atoms == 0:
        raise InvalidInputError("cannot fit a colligation to the empty measure")
    dim = 2 * n_atoms
    if n_samples is None:
        n_samples = max(24, 4 * dim + 8)
    rng = np.random.default_rng(seed)
    domain = np.zeros((dim + 1, n_samples), dtype=complex)
    images = np.zeros((dim + 1, n_samples), dtype=complex)
    for k in range(n_samples):
        radius = 0.6 * np.sqrt(rng.uniform(size=2))
        angle = rng.uniform(0, 2 * np.pi, size=2)
        lam = (radius[0] * np.exp(1j * angle[0]), radius[1] * np.exp(1j * angle[1]))
        u = synth_model_vector(syn, lam)
        domain[0, k] = 1.0
        domain[1:n_atoms + 1, k] = lam[0] * u[:n_atoms]
        domain[n_atoms + 1:, k] = lam[1] * u[n_atoms:]
        images[0, k] = synth_eval(syn, lam)
        images[1:, k] = u
    L = unitary_extension(domain, images, tol)
    P1 = np.zeros((dim, dim), dtype=complex)
    P1[:n_atoms, :n_atoms] = np.eye(n_atoms)
    fitted = Colligation(a=L[0, 0], beta=L[0, 1:].conj(), gamma=L[1:, 0],
                         D=L[1:, 1:], P1=P1)
    for _ in range(5):
        lam = tuple(0.7 * np.sqrt(rng.uniform(size=2))
                    * np.exp(1j * rng.uniform(0, 2 * np.pi, size=2)))
        if abs(eval_phi(fitted, lam, tol) - synth_eval(syn, lam)) > 1e-8:
            raise InternalInconsistencyError(
                "fitted colligation disagrees with the synthesized function"
            )
    return fitted


class SlopeVerification(NamedTuple):
    deltas: tuple
    numeric: tuple
    analytic: tuple
    max_rel_err: float
    passed: bool


def verify_slope(syn: SynthesizedSchur, deltas, tol: float = 1e-5) -> SlopeVerification:
    """Compare numeric directional derivatives at tau with the slope formula.

    For each direction the analytic side is
    omega * conj(tau_2) delta_2 * h( conj(tau_2) delta_2 / (conj(tau_1) delta_1) )
    with h evaluated from the measure; errors are relative to 1 + |value|.
    """
    phi = synth_evaluator(syn)
    numeric, analytic = [], []
    worst = 0.0
    for delta in deltas:
        delta = slope_mod.require_inward(delta, syn.tau)
        num, _ = _numeric_derivative(phi, syn, delta)
        w1 = np.conj(syn.tau[0]) * delta[0]
        w2 = np.conj(syn.tau[1]) * delta[1]
        ana = complex(syn.omega * w2 * h_from_measure(syn.nu, w2 / w1))
        numeric.append(complex(num))
        analytic.append(ana)
        worst = max(worst, float(abs(num - ana) / (1.0 + abs(ana))))
    return SlopeVerification(tuple(deltas), tuple(numeric), tuple(analytic),
                             worst, bool(worst < tol))


def _numeric_derivative(phi, syn: SynthesizedSchur, delta):
    return slope_mod.directional_derivative_numeric(
        phi, syn.tau, delta, phi_tau=syn.omega
    )


class CarapointVerification(NamedTuple):
    liminf: float
    expected_mass: float
    boundary_value: complex
    omega: complex
    passed: bool


def verify_carapoint(syn: SynthesizedSchur, tol: float = 1e-6) -> CarapointVerification:
    """Check the radial Julia liminf equals the total mass of nu and that the
    nontangential boundary value equals omega."""
    phi = synth_evaluator(syn)
    path = boundary.ApproachPath.radial(syn.tau)
    liminf = boundary.radial_liminf(phi, path).estimate.real
    value = boundary.nontangential_value(phi, path).estimate
    mass = syn.nu.total_mass
    passed = abs(liminf - mass) < tol * (1.0 + mass) and abs(value - syn.omega) < tol
    return CarapointVerification(float(liminf), mass, complex(value),
                                 syn.omega, bool(passed))

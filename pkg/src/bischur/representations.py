"""Three equivalent encodings of slope-type Pick functions, for atomic data.

A function h with both h and -z h(z) in the Pick class is exactly one of

  (measure form)     h(z) = - sum_i w_i / (1 - s_i + s_i z),  s_i in [0, 1],
  (Nevanlinna form)  h(z) = c + d z + (1/pi) sum_i m_i (1 + t_i z)/(t_i - z)
                     with d = 0, all t_i <= 0 and c <= (1/pi) sum_i t_i m_i,

and the two atomic encodings convert into each other by

  t = 1 - 1/s,   m = pi w (1 - t)/(1 + t^2),   nu({0}) = (1/pi) sum t m - c.

Only atomic measures are represented; continuous data enters elsewhere via
quadrature discretization.  A Stieltjes-inversion integrator provides an
independent numerical route back to the measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._integrate import adaptive_trapezoid
from ._limits import refine_to_limit
from .errors import (
    DivergenceError,
    InvalidInputError,
    NoLimitError,
    NotSlopeTypeError,
    PoleError,
)

__all__ = [
    "DiscreteMeasure01",
    "NevanlinnaData",
    "h_from_measure",
    "h_from_nevanlinna",
    "nevanlinna_from_measure",
    "measure_from_nevanlinna",
    "measure_evaluator",
    "nevanlinna_evaluator",
    "stieltjes_recover",
    "cauchy_rep_eval",
    "growth_check",
]

_ZERO_WEIGHT = 1e-12


def _normalize_atoms(pairs, *, low=None, high=None, what="atom"):
    """Sort, merge coincident locations, drop zero weights, check signs."""
    merged: dict[float, float] = {}
    for loc, weight in pairs:
        loc, weight = float(loc), float(weight)
        if not (math.isfinite(loc) and math.isfinite(weight)):
            raise InvalidInputError(f"{what} data must be finite")
        if weight < 0:
            raise InvalidInputError(f"{what} weights must be nonnegative")
        if low is not None and (loc < low or loc > high):
            raise InvalidInputError(f"{what} location {loc} outside [{low}, {high}]")
        merged[loc] = merged.get(loc, 0.0) + weight
    return tuple(sorted((s, w) for s, w in merged.items() if w > 0.0))


@dataclass(frozen=True)
class DiscreteMeasure01:
    """Atomic positive measure on [0, 1]: sorted (location, weight) pairs."""

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "atoms", _normalize_atoms(self.atoms, low=0.0, high=1.0, what="measure")
        )

    @property
    def total_mass(self) -> float:
        return float(sum(w for _, w in self.atoms))

    def mass_at(self, s: float) -> float:
        return next((w for loc, w in self.atoms if loc == s), 0.0)


@dataclass(frozen=True)
class NevanlinnaData:
    """Data (c, d, mu) of h(z) = c + d z + (1/pi) int (1 + t z)/(t - z) dmu."""

    c: float
    d: float
    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        c, d = float(self.c), float(self.d)
        if not (math.isfinite(c) and math.isfinite(d)):
            raise InvalidInputError("c and d must be finite")
        if d < 0:
            raise InvalidInputError("d must be nonnegative")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "atoms", _normalize_atoms(self.atoms, what="Nevanlinna"))

    @property
    def total_mass(self) -> float:
        return float(sum(m for _, m in self.atoms))


def h_from_measure(nu: DiscreteMeasure01, z) -> complex:
    """Evaluate - sum w / (1 - s + s z) off the cut (-inf, 0]."""
    z = complex(z)
    total = 0.0 + 0.0j
    for s, w in nu.atoms:
        den = 1.0 - s + s * z
        if abs(den) < 1e-14 * (1.0 + abs(z)):
            raise PoleError(f"evaluation point {z} hits the pole of the atom at s={s}")
        total += w / den
    return -total


def h_from_nevanlinna(nd: NevanlinnaData, z) -> complex:
    """Evaluate c + d z + (1/pi) sum m (1 + t z)/(t - z)."""
    z = complex(z)
    total = complex(nd.c) + nd.d * z
    for t, m in nd.atoms:
        den = t - z
        if abs(den) < 1e-14 * (1.0 + abs(z)):
            raise PoleError(f"evaluation point {z} coincides with the atom at t={t}")
        total += m * (1.0 + t * z) / (math.pi * den)
    return total


def nevanlinna_from_measure(nu: DiscreteMeasure01) -> NevanlinnaData:
    """Convert the [0, 1]-measure form into Nevanlinna data.

    The result always satisfies the slope-type conditions: d = 0, no mass on
    (0, inf), and c <= (1/pi) sum t m.
    """
    atoms = []
    mass_at_zero = 0.0
    for s, w in nu.atoms:
        if s == 0.0:
            mass_at_zero += w
            continue
        t = 1.0 - 1.0 / s
        m = math.pi * w * (1.0 - t) / (1.0 + t * t)
        atoms.append((t, m))
    first_moment = sum(t * m for t, m in atoms) / math.pi
    return NevanlinnaData(c=first_moment - mass_at_zero, d=0.0, atoms=tuple(atoms))


def measure_from_nevanlinna(nd: NevanlinnaData) -> DiscreteMeasure01:
    """Invert ``nevanlinna_from_measure``; raises NotSlopeTypeError naming the
    violated condition when the data is not of slope type."""
    if nd.d > 0.0:
        raise NotSlopeTypeError("condition (a) fails: d must vanish", "a")
    if any(t > 0.0 for t, _ in nd.atoms):
        raise NotSlopeTypeError(
            "condition (b) fails: the measure must not charge (0, inf)", "b"
        )
    first_moment = sum(t * m for t, m in nd.atoms) / math.pi
    slack = 1e-12 * (1.0 + abs(first_moment))
    if nd.c > first_moment + slack:
        raise NotSlopeTypeError(
            f"condition (c) fails: c = {nd.c} exceeds the first moment "
            f"{first_moment}", "c"
        )
    atoms = [
        (1.0 / (1.0 - t), m * (1.0 + t * t) / (math.pi * (1.0 - t)))
        for t, m in nd.atoms
    ]
    mass_at_zero = first_moment - nd.c
    if mass_at_zero > slack:
        atoms.append((0.0, mass_at_zero))
    return DiscreteMeasure01(tuple(atoms))


def measure_evaluator(nu: DiscreteMeasure01):
    return lambda z: h_from_measure(nu, z)


def nevanlinna_evaluator(nd: NevanlinnaData):
    return lambda z: h_from_nevanlinna(nd, z)


def stieltjes_recover(h, a: float, b: float, ys, rel_tol: float = 1e-6) -> float:
    """Recover Poisson-measure mass on a window by Stieltjes inversion.

    Integrates Im h(x + iy) over [a, b] for each y in the decreasing sequence
    ``ys`` and extrapolates y -> 0.  For Nevanlinna data the limit is the
    window mass of (1 + t^2) dmu(t), with half weight for atoms sitting on a
    window endpoint.  Raises NoLimitError when the sequence does not
    stabilize.
    """
    if not b > a:
        raise InvalidInputError("window must satisfy a < b")
    ys = [float(y) for y in ys]
    if any(y <= 0 for y in ys) or any(q >= p for p, q in zip(ys, ys[1:])):
        raise InvalidInputError("ys must be positive and strictly decreasing")

    def window_integral(y):
        return adaptive_trapezoid(
            lambda x: complex(h(complex(x, y))).imag, a, b, rel_tol=rel_tol
        )

    report = refine_to_limit(window_integral, ys, ys, tol=10 * rel_tol)
    if not report.converged:
        raise NoLimitError(
            f"window integrals did not stabilize (best gap {report.achieved:.3e})"
        )
    return float(report.estimate.real)


def cauchy_rep_eval(atoms, z) -> complex:
    """Cauchy transform sum m / (t - z) of an atomic measure, Im z > 0."""
    z = complex(z)
    if z.imag <= 0:
        raise InvalidInputError("the Cauchy representation is evaluated on Im z > 0")
    atoms = _normalize_atoms(atoms, what="Cauchy")
    return complex(sum(m / (t - z) for t, m in atoms))


def growth_check(h, ys) -> float:
    """Extrapolated limit of y Im h(iy) along an increasing sequence.

    For a Cauchy transform this is the total mass; a linear term makes it
    blow up, reported as DivergenceError.
    """
    ys = [float(y) for y in ys]
    if any(y <= 0 for y in ys) or any(q <= p for p, q in zip(ys, ys[1:])):
        raise InvalidInputError("ys must be positive and strictly increasing")
    report = refine_to_limit(
        lambda y: y * complex(h(1j * y)).imag,
        ys,
        [1.0 / (y * y) for y in ys],
        tol=1e-9,
    )
    if not report.converged:
        raise DivergenceError(
            f"y Im h(iy) did not stabilize (best gap {report.achieved:.3e})"
        )
    return float(report.estimate.real)

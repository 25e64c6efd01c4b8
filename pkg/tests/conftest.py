import numpy as np
import pytest

from bischur import Colligation, DiscreteMeasure01, SynthesizedSchur, fit_colligation

CHI = (1.0 + 0j, 1.0 + 0j)


def favourite_formula(lam):
    """(l1/2 + l2/2 - l1 l2) / (1 - l1/2 - l2/2), the running example."""
    l1, l2 = lam
    return (0.5 * l1 + 0.5 * l2 - l1 * l2) / (1.0 - 0.5 * l1 - 0.5 * l2)


def random_interior(rng, rmax=0.9):
    r = rmax * np.sqrt(rng.uniform(size=2))
    a = rng.uniform(0.0, 2.0 * np.pi, size=2)
    return (r[0] * np.exp(1j * a[0]), r[1] * np.exp(1j * a[1]))


@pytest.fixture(scope="session")
def favourite_colligation():
    """Exact 2-dimensional realization of the favourite function."""
    s = 1.0 / np.sqrt(2.0)
    return Colligation(
        a=0.0,
        beta=[s, s],
        gamma=[s, s],
        D=[[0.5, -0.5], [-0.5, 0.5]],
        P1=[[1.0, 0.0], [0.0, 0.0]],
    )


@pytest.fixture(scope="session")
def favourite_measure():
    return DiscreteMeasure01(((0.5, 1.0),))


@pytest.fixture(scope="session")
def fitted_favourite(favourite_measure):
    """Colligation fitted to the favourite by the lurking-isometry route."""
    return fit_colligation(SynthesizedSchur(favourite_measure))


@pytest.fixture(scope="session")
def coordinate_colligation():
    """One-dimensional realization of phi(lam) = lam_1."""
    return Colligation(a=0.0, beta=[1.0], gamma=[1.0], D=[[0.0]], P1=[[1.0]])

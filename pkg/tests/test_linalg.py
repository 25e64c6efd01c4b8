import numpy as np
import pytest

from bischur import (
    IllConditionedError,
    InvalidInputError,
    NoSolutionError,
    Tolerances,
    min_norm_solve,
    null_space,
    structure_check,
)


class TestNullSpace:
    def test_identity_has_trivial_kernel(self):
        assert null_space(np.eye(2)).shape == (2, 0)

    def test_zero_matrix_kernel_is_everything(self):
        Q = null_space(np.zeros((2, 2)))
        assert Q.shape == (2, 2)
        assert np.allclose(Q.conj().T @ Q, np.eye(2), atol=1e-12)

    def test_coordinate_kernel(self):
        Q = null_space(np.diag([0.0, 1.0]))
        assert Q.shape == (2, 1)
        assert abs(abs(Q[0, 0]) - 1.0) < 1e-12 and abs(Q[1, 0]) < 1e-12

    def test_random_kernels_are_orthonormal_and_annihilated(self):
        rng = np.random.default_rng(3)
        tol = Tolerances()
        for _ in range(25):
            m, n, r = rng.integers(2, 7), rng.integers(2, 7), rng.integers(1, 3)
            r = min(r, m, n)
            A = (rng.normal(size=(m, r)) + 1j * rng.normal(size=(m, r))) @ (
                rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n)))
            Q = null_space(A)
            assert Q.shape[1] == n - r
            if Q.shape[1]:
                assert np.linalg.norm(Q.conj().T @ Q - np.eye(Q.shape[1])) <= tol.structural
                s_max = np.linalg.norm(A, 2)
                assert np.linalg.norm(A @ Q, 2) <= 10 * tol.rank_rel * s_max

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidInputError):
            null_space(np.array([[np.nan, 0.0], [0.0, 1.0]]))


class TestMinNormSolve:
    def test_invertible_case(self):
        x = min_norm_solve(np.eye(2), [1.0, 2.0])
        assert np.allclose(x, [1.0, 2.0], atol=1e-14)

    def test_minimal_norm_selects_zero_in_kernel_direction(self):
        x = min_norm_solve(np.diag([1.0, 0.0]), [3.0, 0.0])
        assert np.allclose(x, [3.0, 0.0], atol=1e-14)

    def test_inconsistent_system_raises_with_residual(self):
        with pytest.raises(NoSolutionError) as err:
            min_norm_solve(np.diag([1.0, 0.0]), [0.0, 1.0])
        assert err.value.residual == pytest.approx(1.0)

    def test_minimality_against_random_solutions(self):
        rng = np.random.default_rng(5)
        tol = Tolerances()
        for _ in range(25):
            n = int(rng.integers(2, 6))
            A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            A[:, -1] = A[:, 0]  # force rank deficiency
            x0 = rng.normal(size=n) + 1j * rng.normal(size=n)
            x = min_norm_solve(A, A @ x0)
            assert np.linalg.norm(x) <= np.linalg.norm(x0) + tol.structural
            # the solution carries no kernel component
            K = null_space(A)
            assert np.abs(K.conj().T @ x).max() < 1e-9

    def test_condition_ceiling(self):
        A = np.diag([1.0, 1e-8])
        with pytest.raises(IllConditionedError):
            min_norm_solve(A, [1.0, 1.0], Tolerances(solve_cond_max=1e6))


class TestStructureCheck:
    def test_identity_is_unitary(self):
        ok, residual = structure_check(np.eye(3), "unitary")
        assert ok and residual == 0.0

    def test_positive_contraction(self):
        ok, residual = structure_check(np.diag([0.5, 0.25]), "positive_contraction")
        assert ok and residual == 0.0

    def test_contraction_failure_measures_excess(self):
        ok, residual = structure_check(np.diag([2.0, 0.0]), "contraction")
        assert not ok and residual >= 1.0

    def test_projection_and_hermitian(self):
        P = np.array([[0.5, 0.5], [0.5, 0.5]])
        assert structure_check(P, "projection").ok
        assert structure_check(P, "hermitian").ok
        assert not structure_check(P + 0.01, "projection").ok

    def test_monotone_in_tolerance(self):
        rng = np.random.default_rng(11)
        A = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        for kind in ("unitary", "hermitian", "contraction",
                     "positive_contraction", "projection"):
            loose = structure_check(A, kind, Tolerances(structural=1e3))
            tight = structure_check(A, kind, Tolerances(structural=1e-12))
            if tight.ok:
                assert loose.ok
            assert loose.residual == tight.residual

    def test_non_square_rejected(self):
        with pytest.raises(InvalidInputError):
            structure_check(np.ones((2, 3)), "unitary")

    def test_unknown_kind_rejected(self):
        with pytest.raises(InvalidInputError):
            structure_check(np.eye(2), "idempotent")


def test_tolerances_validation():
    with pytest.raises(InvalidInputError):
        Tolerances(rank_rel=2.0)
    with pytest.raises(InvalidInputError):
        Tolerances(structural=-1.0)

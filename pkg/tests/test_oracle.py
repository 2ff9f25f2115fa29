"""Tests for the dense ground-truth machinery."""

import math

import numpy as np
import pytest

from kronbounds import (
    NotSPDError,
    assemble_kronecker_sum,
    cholesky,
    custom_matrix,
    inverse_column,
    inverse_transpose_factor_entry,
    lyapunov_residual,
    make_preset,
)


class TestAssembleKroneckerSum:
    def test_small_laplacian_by_hand(self):
        m = make_preset("fd-laplacian", 2)
        s = assemble_kronecker_sum(m, m)
        expected = np.array(
            [
                [4.0, -1.0, -1.0, 0.0],
                [-1.0, 4.0, 0.0, -1.0],
                [-1.0, 0.0, 4.0, -1.0],
                [0.0, -1.0, -1.0, 4.0],
            ]
        )
        np.testing.assert_array_equal(s, expected)

    def test_identity_components(self):
        eye = custom_matrix([np.ones(3)])
        s = assemble_kronecker_sum(eye, eye)
        np.testing.assert_array_equal(s, 2.0 * np.eye(9))

    def test_extreme_eigenvalue_additivity(self):
        m1 = make_preset("fd-laplacian", 5)
        m2 = make_preset("dd", 4)
        s = assemble_kronecker_sum(m1, m2)
        w = np.linalg.eigvalsh(s)
        w1 = np.linalg.eigvalsh(m1.to_dense())
        w2 = np.linalg.eigvalsh(m2.to_dense())
        assert w[0] == pytest.approx(w1[0] + w2[0], rel=1e-12)
        assert w[-1] == pytest.approx(w1[-1] + w2[-1], rel=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_spectrum_is_pairwise_sums(self, n):
        m = make_preset("legendre", n)
        s = assemble_kronecker_sum(m, m)
        w = np.sort(np.linalg.eigvalsh(s))
        wm = np.linalg.eigvalsh(m.to_dense())
        pairwise = np.sort(np.add.outer(wm, wm).ravel())
        np.testing.assert_allclose(w, pairwise, rtol=0, atol=1e-10)

    def test_bandwidth_of_result(self):
        m = make_preset("ninepoint", 5)
        s = assemble_kronecker_sum(m, m)
        cap = m.b * m.n + m.b
        idx = np.abs(np.subtract.outer(np.arange(25), np.arange(25)))
        assert np.all(s[idx > cap] == 0.0)

    def test_order_cap(self):
        m = make_preset("dd", 101)
        with pytest.raises(ValueError, match="desk-scale"):
            assemble_kronecker_sum(m, m)


class TestCholesky:
    def test_diagonal(self):
        factor = cholesky(np.diag([4.0, 9.0]))
        np.testing.assert_allclose(factor.lower, np.diag([2.0, 3.0]), rtol=1e-15)

    def test_two_by_two_by_hand(self):
        factor = cholesky(np.array([[4.0, -1.0], [-1.0, 4.0]]))
        expected = np.array([[2.0, 0.0], [-0.5, math.sqrt(3.75)]])
        np.testing.assert_allclose(factor.lower, expected, rtol=1e-15)

    def test_indefinite_rejected(self):
        with pytest.raises(NotSPDError):
            cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]))

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            cholesky(np.array([[1.0, 0.5], [0.0, 1.0]]))

    @pytest.mark.parametrize("name,n", [("fd-laplacian", 12), ("dd", 10), ("legendre", 8)])
    def test_reconstruction(self, name, n):
        m = make_preset(name, n)
        s = assemble_kronecker_sum(m, m)
        factor = cholesky(s)
        err = np.linalg.norm(factor.lower @ factor.lower.T - s, "fro")
        assert err <= 1e-12 * np.linalg.norm(s, "fro")
        assert np.all(np.diag(factor.lower) > 0.0)


class TestInverseColumn:
    def test_small_laplacian_by_hand(self):
        m = make_preset("fd-laplacian", 2)
        s = assemble_kronecker_sum(m, m)
        np.testing.assert_allclose(inverse_column(s, 1), np.array([7.0, 2.0, 2.0, 1.0]) / 24.0, rtol=1e-13)

    def test_identity(self):
        x = inverse_column(np.eye(5), 3)
        np.testing.assert_array_equal(x, np.eye(5)[:, 2])

    def test_inverse_symmetry(self):
        m = make_preset("dd", 4)
        s = assemble_kronecker_sum(m, m)
        factor = cholesky(s)
        x3 = inverse_column(s, 3, factor)
        x11 = inverse_column(s, 11, factor)
        assert x3[10] == pytest.approx(x11[2], rel=1e-12)

    def test_residual_contract(self):
        m = make_preset("legendre", 10)
        s = assemble_kronecker_sum(m, m)
        x = inverse_column(s, 55)
        e = np.zeros(100)
        e[54] = 1.0
        resid = np.max(np.abs(s @ x - e))
        assert resid <= 1e-10 * np.max(np.sum(np.abs(s), axis=1))

    def test_inverse_diagonal_is_positive(self):
        m = make_preset("fd-laplacian", 5)
        s = assemble_kronecker_sum(m, m)
        factor = cholesky(s)
        for t in range(1, 26):
            assert inverse_column(s, t, factor)[t - 1] > 0.0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            inverse_column(np.eye(3), 4)

    def test_not_spd(self):
        with pytest.raises(NotSPDError):
            inverse_column(np.array([[1.0, 2.0], [2.0, 1.0]]), 1)


class TestLyapunovResidual:
    def test_defining_property(self):
        m = make_preset("fd-laplacian", 6)
        s = assemble_kronecker_sum(m, m)
        factor = cholesky(s)
        for t in (1, 14, 36):
            xt = inverse_column(s, t, factor).reshape((6, 6), order="F")
            assert lyapunov_residual(m, m, xt, t) <= 1e-10

    def test_zero_solution(self):
        m = make_preset("fd-laplacian", 3)
        assert lyapunov_residual(m, m, np.zeros((3, 3)), 5) == pytest.approx(1.0, rel=1e-15)

    def test_perturbation_grows_residual(self):
        m = make_preset("fd-laplacian", 5)
        s = assemble_kronecker_sum(m, m)
        xt = inverse_column(s, 12).reshape((5, 5), order="F")
        base = lyapunov_residual(m, m, xt, 12)
        bumped = xt.copy()
        bumped[2, 2] += 1e-3
        assert lyapunov_residual(m, m, bumped, 12) > 1e-4 > base

    def test_two_matrix_orientation(self):
        m1 = make_preset("fd-laplacian", 3)
        m2 = make_preset("dd", 4)
        s = assemble_kronecker_sum(m1, m2)
        factor = cholesky(s)
        for t in (1, 5, 12):
            xt = inverse_column(s, t, factor).reshape((4, 3), order="F")
            assert lyapunov_residual(m1, m2, xt, t) <= 1e-10

    def test_shape_mismatch(self):
        m1 = make_preset("fd-laplacian", 3)
        m2 = make_preset("dd", 4)
        with pytest.raises(ValueError, match="shape"):
            lyapunov_residual(m1, m2, np.zeros((3, 4)), 1)


class TestInverseTransposeFactorEntry:
    def test_diagonal_factor(self):
        factor = cholesky(np.diag([4.0, 9.0]))
        assert inverse_transpose_factor_entry(factor, 1, 1) == pytest.approx(0.5, rel=1e-15)
        assert inverse_transpose_factor_entry(factor, 2, 2) == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_upper_triangular_structure(self):
        m = make_preset("fd-laplacian", 2)
        factor = cholesky(assemble_kronecker_sum(m, m))
        assert inverse_transpose_factor_entry(factor, 3, 1) == 0.0
        assert inverse_transpose_factor_entry(factor, 4, 2) == 0.0

    def test_matches_dense_inverse(self):
        m = make_preset("dd", 3)
        factor = cholesky(assemble_kronecker_sum(m, m))
        dense = np.linalg.inv(factor.lower.T)
        for k in range(1, 10):
            for t in range(1, 10):
                assert inverse_transpose_factor_entry(factor, k, t) == pytest.approx(
                    dense[k - 1, t - 1], rel=1e-12, abs=1e-14
                )

    def test_out_of_range(self):
        factor = cholesky(np.eye(3))
        with pytest.raises(IndexError):
            inverse_transpose_factor_entry(factor, 0, 1)

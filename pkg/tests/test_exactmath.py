"""Exact scalar and matrix arithmetic."""

from fractions import Fraction

import numpy as np
import pytest

from latticestates.exactmath import (GR_I, GR_ONE, GR_ZERO, DenseMatrix,
                                     GaussianRational, matvec, outer, vec_dot)


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


class TestGaussianRational:
    def test_field_operations(self):
        a = gr(Fraction(1, 2), Fraction(1, 3))
        b = gr(2, -1)
        assert a + b == gr(Fraction(5, 2), Fraction(-2, 3))
        assert a - b == gr(Fraction(-3, 2), Fraction(4, 3))
        assert a * b == gr(Fraction(4, 3), Fraction(1, 6))
        assert -a == gr(Fraction(-1, 2), Fraction(-1, 3))

    def test_i_squares_to_minus_one(self):
        assert GR_I * GR_I == -GR_ONE

    def test_conjugate_and_zero(self):
        assert gr(1, 2).conjugate() == gr(1, -2)
        assert GR_ZERO.is_zero()
        assert not GR_ONE.is_zero()

    def test_complex_conversion(self):
        assert complex(gr(Fraction(1, 4), Fraction(-3, 4))) == 0.25 - 0.75j

    def test_mixing_with_plain_numbers(self):
        assert 2 * gr(1, 1) == gr(2, 2)
        assert gr(1, 1) + Fraction(1, 2) == gr(Fraction(3, 2), 1)


class TestDenseMatrix:
    def test_exact_matmul_matches_float(self):
        a = DenseMatrix.from_rows([[1, 2], [3, 4]])
        b = DenseMatrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b) == DenseMatrix.from_rows([[2, 1], [4, 3]])
        assert np.allclose((a @ b).to_float(), a.to_float() @ b.to_float())

    def test_kron_dimensions_and_values(self):
        a = DenseMatrix.from_rows([[0, 1], [1, 0]])
        k = a.kron(DenseMatrix.identity(2))
        assert k.dimension == 4
        assert np.allclose(k.to_float(), np.kron(a.to_float(), np.eye(2)))

    def test_dagger_and_trace(self):
        m = DenseMatrix.from_rows([[gr(0), gr(0, 1)], [gr(0), gr(2)]])
        assert m.dagger().entry(1, 0) == gr(0, -1)
        assert m.trace() == gr(2)

    def test_hermitian_checks(self):
        h = DenseMatrix.from_rows([[gr(1), gr(0, 1)], [gr(0, -1), gr(2)]])
        assert h.is_hermitian()
        assert not DenseMatrix.from_rows([[0, 1], [0, 0]]).is_hermitian()

    def test_mode_mixing_rejected(self):
        a = DenseMatrix.identity(2, exact=True)
        b = DenseMatrix.identity(2, exact=False)
        with pytest.raises(ValueError):
            _ = a @ b

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    def test_vector_helpers(self):
        m = DenseMatrix.from_rows([[0, 1], [1, 0]])
        v = (GR_ONE, GR_ZERO)
        assert matvec(m, v) == (GR_ZERO, GR_ONE)
        p = outer(v, v)
        assert p == DenseMatrix.from_rows([[1, 0], [0, 0]])
        assert vec_dot(v, v) == GR_ONE

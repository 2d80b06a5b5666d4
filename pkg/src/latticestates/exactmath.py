"""Exact complex-rational scalars and small dense matrices.

All certificate-grade arithmetic in this package runs over Gaussian
rationals (complex numbers with rational real and imaginary parts), so
density matrices, partial transposes and covering weights are exact.
Floating point enters only at the eigensolver and seesaw boundaries,
via :meth:`DenseMatrix.to_float`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Scalar = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value), Fraction(0))

    def __add__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"


GR_ZERO = GaussianRational(Fraction(0), Fraction(0))
GR_ONE = GaussianRational(Fraction(1), Fraction(0))
GR_I = GaussianRational(Fraction(0), Fraction(1))

#: The four exact values of i**k for k = 0..3.
I_POWERS = (GR_ONE, GR_I, -GR_ONE, -GR_I)


class DenseMatrix:
    """Square matrix in one of two modes: exact Gaussian-rational or float.

    The mode is fixed at construction.  Exact matrices are immutable
    tuples of tuples of :class:`GaussianRational`; float matrices wrap a
    complex128 numpy array.  Mixing modes in an operation is an error.
    """

    __slots__ = ("dimension", "exact", "_rows", "_arr")

    def __init__(self, data, exact: bool):
        self.exact = exact
        if exact:
            rows = tuple(tuple(GaussianRational.of(v) if not isinstance(v, GaussianRational) else v
                               for v in row) for row in data)
            self.dimension = len(rows)
            if any(len(r) != self.dimension for r in rows):
                raise ValueError("matrix must be square")
            self._rows = rows
            self._arr = None
        else:
            arr = np.asarray(data, dtype=complex)
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise ValueError("matrix must be square")
            self._arr = arr
            self._rows = None
            self.dimension = arr.shape[0]

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zeros(dimension: int, exact: bool = True) -> "DenseMatrix":
        if exact:
            return DenseMatrix([[GR_ZERO] * dimension for _ in range(dimension)], True)
        return DenseMatrix(np.zeros((dimension, dimension), dtype=complex), False)

    @staticmethod
    def identity(dimension: int, exact: bool = True) -> "DenseMatrix":
        if exact:
            return DenseMatrix(
                [[GR_ONE if i == j else GR_ZERO for j in range(dimension)]
                 for i in range(dimension)], True)
        return DenseMatrix(np.eye(dimension, dtype=complex), False)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]]) -> "DenseMatrix":
        return DenseMatrix(rows, True)

    # -- accessors ------------------------------------------------------

    def entry(self, i: int, j: int):
        if self.exact:
            return self._rows[i][j]
        return self._arr[i, j]

    def rows(self):
        if self.exact:
            return self._rows
        return self._arr

    def to_float(self) -> np.ndarray:
        if self.exact:
            return np.array([[complex(v) for v in row] for row in self._rows],
                            dtype=complex)
        return self._arr.copy()

    # -- arithmetic -----------------------------------------------------

    def _check_mode(self, other: "DenseMatrix") -> None:
        if self.exact != other.exact:
            raise ValueError("cannot mix exact and float matrices")
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_mode(other)
        if self.exact:
            d = self.dimension
            return DenseMatrix(
                [[self._rows[i][j] + other._rows[i][j] for j in range(d)]
                 for i in range(d)], True)
        return DenseMatrix(self._arr + other._arr, False)

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_mode(other)
        if self.exact:
            d = self.dimension
            return DenseMatrix(
                [[self._rows[i][j] - other._rows[i][j] for j in range(d)]
                 for i in range(d)], True)
        return DenseMatrix(self._arr - other._arr, False)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_mode(other)
        if self.exact:
            d = self.dimension
            ot = list(zip(*other._rows))  # columns
            out = []
            for i in range(d):
                ri = self._rows[i]
                out.append([
                    sum((ri[k] * col[k] for k in range(d) if not ri[k].is_zero()),
                        GR_ZERO)
                    for col in ot
                ])
            return DenseMatrix(out, True)
        return DenseMatrix(self._arr @ other._arr, False)

    def scaled(self, factor: Scalar | complex) -> "DenseMatrix":
        if self.exact:
            f = GaussianRational.of(factor)
            return DenseMatrix(
                [[v * f for v in row] for row in self._rows], True)
        return DenseMatrix(self._arr * complex(factor), False)

    def dagger(self) -> "DenseMatrix":
        d = self.dimension
        if self.exact:
            return DenseMatrix(
                [[self._rows[j][i].conjugate() for j in range(d)] for i in range(d)],
                True)
        return DenseMatrix(self._arr.conj().T, False)

    def transpose(self) -> "DenseMatrix":
        d = self.dimension
        if self.exact:
            return DenseMatrix(
                [[self._rows[j][i] for j in range(d)] for i in range(d)], True)
        return DenseMatrix(self._arr.T.copy(), False)

    def trace(self):
        if self.exact:
            return sum((self._rows[i][i] for i in range(self.dimension)), GR_ZERO)
        return complex(np.trace(self._arr))

    def kron(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.exact != other.exact:
            raise ValueError("cannot mix exact and float matrices")
        if self.exact:
            da, db = self.dimension, other.dimension
            out = [[GR_ZERO] * (da * db) for _ in range(da * db)]
            for i in range(da):
                for j in range(da):
                    a = self._rows[i][j]
                    if a.is_zero():
                        continue
                    for k in range(db):
                        for l in range(db):
                            out[i * db + k][j * db + l] = a * other._rows[k][l]
            return DenseMatrix(out, True)
        return DenseMatrix(np.kron(self._arr, other._arr), False)

    # -- predicates -----------------------------------------------------

    def is_hermitian(self, tol: float = 0.0) -> bool:
        if self.exact:
            d = self.dimension
            return all(self._rows[i][j] == self._rows[j][i].conjugate()
                       for i in range(d) for j in range(i, d))
        return bool(np.max(np.abs(self._arr - self._arr.conj().T)) <= tol)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.exact != other.exact or self.dimension != other.dimension:
            return False
        if self.exact:
            return self._rows == other._rows
        return bool(np.array_equal(self._arr, other._arr))

    def __repr__(self) -> str:
        mode = "exact" if self.exact else "float"
        return f"DenseMatrix(dimension={self.dimension}, mode={mode})"


def matvec(matrix: DenseMatrix, vector: Sequence[GaussianRational]) -> tuple:
    """Exact matrix-vector product."""
    if not matrix.exact:
        raise ValueError("matvec expects an exact matrix")
    rows = matrix.rows()
    return tuple(
        sum((rows[i][k] * vector[k] for k in range(matrix.dimension)
             if not rows[i][k].is_zero()), GR_ZERO)
        for i in range(matrix.dimension))


def outer(u: Sequence[GaussianRational], v: Sequence[GaussianRational]) -> DenseMatrix:
    """Exact outer product |u><v|."""
    vc = [x.conjugate() for x in v]
    return DenseMatrix([[a * b for b in vc] for a in u], True)


def vec_dot(u: Iterable[GaussianRational], v: Iterable[GaussianRational]) -> GaussianRational:
    """Exact inner product <u|v> (conjugate-linear in the first slot)."""
    return sum((a.conjugate() * b for a, b in zip(u, v)), GR_ZERO)

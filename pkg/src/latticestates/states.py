"""Sigma-diagonal states, density matrices, partial transposition, PPT oracle.

States here are mixtures of the orthonormal projectors obtained by acting
with 1 (x) sigma_s on the totally symmetric vector.  Density matrices and
partial transposes are built in exact arithmetic; floats appear only in
the eigensolver.

The two-qubit (n = 1) case has closed forms for the partial-transpose
spectrum and the separability test; both are cross-checked against the
dense oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .exactmath import GR_ZERO, DenseMatrix, GaussianRational, outer
from .pauli import PauliString, dense, product_index
from .patterns import Pattern

#: A partial transpose is accepted as positive down to this eigenvalue.
#: Lattice-state PT spectra are rationals with small denominators, so no
#: boundary case ever sits near the threshold.
PPT_EIGENVALUE_TOLERANCE = 1e-10

MAX_QUBITS_PER_PARTY = 3  # dense operations are capped at dimension 64


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_QUBITS_PER_PARTY:
        raise ValueError(f"qubits per party must be 1..{MAX_QUBITS_PER_PARTY}, got {n}")


def all_strings(n: int) -> tuple[PauliString, ...]:
    """All 4^n Pauli strings of length n, in lexicographic-by-last-factor order
    matching the lattice bit order for n = 2."""
    return tuple(tuple(reversed(t)) for t in itertools.product(range(4), repeat=n))


def symmetric_vector(n: int) -> np.ndarray:
    """The unit vector (1/sqrt(2^n)) sum_i |i>|i> on C^{2^n} (x) C^{2^n}."""
    _check_n(n)
    d = 2 ** n
    v = np.zeros(d * d, dtype=complex)
    for i in range(d):
        v[i * d + i] = 1.0
    return v / np.sqrt(d)


def basis_vector_exact(string: PauliString) -> tuple[GaussianRational, ...]:
    """The basis vector scaled by sqrt(2^n), whose entries are exact.

    Component (i, j) of (1 (x) sigma_s) sum_k |k>|k> is sigma_s[j, i].
    """
    n = len(string)
    _check_n(n)
    d = 2 ** n
    sigma = dense(string)
    return tuple(sigma.entry(j, i) for i in range(d) for j in range(d))


def basis_vector(string: PauliString) -> np.ndarray:
    """Unit vector (1 (x) sigma_s) |Psi+>; the 4^n of them are orthonormal."""
    d = 2 ** len(string)
    u = basis_vector_exact(string)
    return np.array([complex(v) for v in u]) / np.sqrt(d)


@lru_cache(maxsize=None)
def basis_projector(string: PauliString) -> DenseMatrix:
    """Exact rank-1 projector onto the basis vector of the string."""
    d = 2 ** len(string)
    u = basis_vector_exact(string)
    return outer(u, u).scaled(Fraction(1, d))


@dataclass(frozen=True)
class SigmaDiagonalState:
    """A probability vector over Pauli strings of a fixed length."""

    n: int
    r: Mapping[PauliString, Fraction]

    def __post_init__(self):
        _check_n(self.n)
        total = Fraction(0)
        for s, w in self.r.items():
            if len(s) != self.n:
                raise ValueError(f"string {s!r} has wrong length for n={self.n}")
            if w < 0:
                raise ValueError(f"negative coefficient at {s!r}")
            total += w
        if total != 1:
            raise ValueError(f"coefficients sum to {total}, expected 1")

    @staticmethod
    def lattice(pattern: Pattern) -> "SigmaDiagonalState":
        """The uniform mixture over a nonempty lattice pattern (n = 2)."""
        if pattern.mask == 0:
            raise ValueError("empty pattern")
        w = Fraction(1, pattern.n_points)
        return SigmaDiagonalState(2, {p: w for p in pattern.points})

    @staticmethod
    def bell(r: Sequence[Fraction]) -> "SigmaDiagonalState":
        """The n = 1 state with coefficients indexed by the Pauli index."""
        if len(r) != 4:
            raise ValueError("need 4 coefficients")
        return SigmaDiagonalState(1, {(m,): Fraction(r[m]) for m in range(4)
                                      if Fraction(r[m]) != 0})


def density_matrix(state: SigmaDiagonalState) -> DenseMatrix:
    """Exact density matrix sum_s r_s P_s; Hermitian with unit trace."""
    d = 4 ** state.n
    out = DenseMatrix.zeros(d)
    for s, w in state.r.items():
        if w:
            out = out + basis_projector(s).scaled(w)
    return out


def partial_transpose(matrix: DenseMatrix, n: int) -> DenseMatrix:
    """Transpose the second tensor factor of a 4^n-dimensional matrix.

    In the product-index decomposition the entry ((i, j), (k, l)) moves to
    ((i, l), (k, j)).  Involutive, trace- and Hermiticity-preserving.
    """
    _check_n(n)
    d = 2 ** n
    if matrix.dimension != d * d:
        raise ValueError(f"dimension {matrix.dimension} does not match n={n}")
    if matrix.exact:
        rows = matrix.rows()
        out = [[GR_ZERO] * (d * d) for _ in range(d * d)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    for l in range(d):
                        out[i * d + l][k * d + j] = rows[i * d + j][k * d + l]
        return DenseMatrix(out, True)
    arr = matrix.to_float().reshape(d, d, d, d).transpose(0, 3, 2, 1).reshape(d * d, d * d)
    return DenseMatrix(arr, False)


@dataclass(frozen=True)
class SpectralReport:
    """Sorted eigenvalues of a Hermitian matrix with the decision tolerance."""

    eigenvalues: tuple[float, ...]
    min_eigenvalue: float
    tolerance: float


def hermitian_eigenvalues(matrix: DenseMatrix,
                          tolerance: float = PPT_EIGENVALUE_TOLERANCE) -> SpectralReport:
    """Eigenvalues of a Hermitian matrix, ascending.

    Raises ValueError when the input fails the Hermiticity check (exact in
    exact mode, 1e-12 elementwise in float mode).
    """
    if matrix.exact:
        if not matrix.is_hermitian():
            raise ValueError("matrix is not Hermitian")
    elif not matrix.is_hermitian(tol=1e-12):
        raise ValueError("matrix is not Hermitian within 1e-12")
    values = np.linalg.eigvalsh(matrix.to_float())
    return SpectralReport(tuple(float(v) for v in values), float(values[0]), tolerance)


def ppt_spectral(state: SigmaDiagonalState) -> tuple[bool, float]:
    """Spectral PPT oracle: exact density matrix and partial transpose,
    float eigensolver at the boundary.  Returns (verdict, min eigenvalue)."""
    pt = partial_transpose(density_matrix(state), state.n)
    report = hermitian_eigenvalues(pt)
    return report.min_eigenvalue >= -PPT_EIGENVALUE_TOLERANCE, report.min_eigenvalue


# -- bulk oracle for the census ---------------------------------------------

@lru_cache(maxsize=1)
def _lattice_pt_components() -> np.ndarray:
    """float PT(P_p) for the 16 lattice projectors, stacked in bit order."""
    comps = np.empty((16, 16, 16), dtype=complex)
    for b in range(16):
        p = (b & 3, b >> 2)
        proj = DenseMatrix(basis_projector(p).to_float(), False)
        comps[b] = partial_transpose(proj, 2).to_float()
    return comps


def lattice_pt_min_eigenvalues(masks: Sequence[int], chunk: int = 4096) -> np.ndarray:
    """Minimum PT eigenvalue for each lattice pattern mask, vectorized.

    Same mathematics as ppt_spectral on the uniform lattice state (the
    partial transpose is linear in the mixture), batched for the census.
    """
    comps = _lattice_pt_components()
    masks_arr = np.asarray(list(masks), dtype=np.int64)
    if np.any(masks_arr <= 0) or np.any(masks_arr > 0xFFFF):
        raise ValueError("masks must be nonempty 16-bit patterns")
    sel = ((masks_arr[:, None] >> np.arange(16)[None, :]) & 1).astype(float)
    sizes = sel.sum(axis=1)
    out = np.empty(len(masks_arr))
    for start in range(0, len(masks_arr), chunk):
        stop = min(start + chunk, len(masks_arr))
        mats = np.tensordot(sel[start:stop], comps, axes=(1, 0))
        mats /= sizes[start:stop, None, None]
        out[start:stop] = np.linalg.eigvalsh(mats)[:, 0]
    return out


# -- n = 1 closed forms ------------------------------------------------------

def bell_pt_coefficients(r: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """The four eigenvalues of the partial transpose of a Bell-diagonal state.

    With coefficients indexed by the Pauli index of the generating string,
    the eigenvalue attached to basis index a is (1 - 2 r_[a,2]) / 2; the
    competing [a,3] indexing found alongside it belongs to a Bell labeling
    that swaps indices 2 and 3, and disagrees with the dense oracle under
    the convention fixed here.
    """
    rr = [Fraction(x) for x in r]
    if len(rr) != 4:
        raise ValueError("need 4 coefficients")
    if sum(rr) != 1 or any(x < 0 for x in rr):
        raise ValueError("coefficients must be a probability vector")
    return tuple(Fraction(1, 2) * (1 - 2 * rr[product_index(a, 2)]) for a in range(4))


def bell_separable(r: Sequence[Fraction]) -> bool:
    """n = 1 separability: every coefficient at most 1/2.

    Equivalent to the spectral PPT verdict, which settles separability in
    this dimension.
    """
    rr = [Fraction(x) for x in r]
    if len(rr) != 4 or sum(rr) != 1 or any(x < 0 for x in rr):
        raise ValueError("coefficients must be a probability vector")
    return max(rr) <= Fraction(1, 2)

"""Exact Pauli-string algebra in the representation where sigma_3 is diagonal.

Indices 0..3 name identity, x, y, z.  An n-qubit string is a plain tuple
of indices; the tensor factor order matches the tuple order.  Lattice
points (alpha, beta) of the 4x4 lattice L16 are exactly the two-factor
strings, with alpha indexing the column and beta the row.

Products carry an exact phase that is a fourth root of unity; phases are
never stored as floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exactmath import GR_I, GR_ONE, DenseMatrix, GaussianRational, I_POWERS

PauliString = tuple  # tuple[int, ...], entries in {0,1,2,3}
LatticePoint = tuple  # tuple[int, int]

#: Transposition eigensigns of the single-qubit basis: T[s_a] = EPSILON[a] * s_a.
EPSILON = (1, 1, -1, 1)

# sigma_a sigma_b = i**_PROD_IPOW[a][b] * sigma_{_PROD_INDEX[a][b]}
_PROD_INDEX = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
_PROD_IPOW = (
    (0, 0, 0, 0),
    (0, 0, 1, 3),
    (0, 3, 0, 1),
    (0, 1, 3, 0),
)

_F0 = Fraction(0)
_F1 = Fraction(1)
_SINGLE = (
    # identity
    ((GR_ONE, GaussianRational(_F0, _F0)), (GaussianRational(_F0, _F0), GR_ONE)),
    # x
    ((GaussianRational(_F0, _F0), GR_ONE), (GR_ONE, GaussianRational(_F0, _F0))),
    # y
    ((GaussianRational(_F0, _F0), -GR_I), (GR_I, GaussianRational(_F0, _F0))),
    # z
    ((GR_ONE, GaussianRational(_F0, _F0)), (GaussianRational(_F0, _F0), -GR_ONE)),
)


@dataclass(frozen=True)
class Phase:
    """A fourth root of unity i**exponent, stored exactly."""

    exponent: int  # 0..3

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 4)

    @property
    def value(self) -> GaussianRational:
        return I_POWERS[self.exponent]

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.exponent + other.exponent)

    def __complex__(self) -> complex:
        return complex(self.value)

    def __repr__(self) -> str:
        return ("+1", "+i", "-1", "-i")[self.exponent]


PHASE_ONE = Phase(0)


def _check_index(a: int) -> None:
    if not 0 <= a <= 3:
        raise ValueError(f"Pauli index out of range: {a!r}")


def pauli_product(a: int, b: int) -> tuple[int, Phase]:
    """Single-factor product: sigma_a sigma_b = phase * sigma_[a,b]."""
    _check_index(a)
    _check_index(b)
    return _PROD_INDEX[a][b], Phase(_PROD_IPOW[a][b])


def product_index(a: int, b: int) -> int:
    """The index [a,b] alone, without the phase."""
    return _PROD_INDEX[a][b]


def string_product(a: PauliString, b: PauliString) -> tuple[PauliString, Phase]:
    """Factor-wise product of two strings with the accumulated phase."""
    if len(a) != len(b):
        raise ValueError(f"string length mismatch: {len(a)} vs {len(b)}")
    indices = []
    exponent = 0
    for x, y in zip(a, b):
        _check_index(x)
        _check_index(y)
        indices.append(_PROD_INDEX[x][y])
        exponent += _PROD_IPOW[x][y]
    return tuple(indices), Phase(exponent)


def factors_anticommute(a: int, b: int) -> bool:
    return a != 0 and b != 0 and a != b


def commutes(a: PauliString, b: PauliString) -> bool:
    """Whether two strings commute (the per-factor signs multiply to +1)."""
    if len(a) != len(b):
        raise ValueError(f"string length mismatch: {len(a)} vs {len(b)}")
    sign = 1
    for x, y in zip(a, b):
        _check_index(x)
        _check_index(y)
        if factors_anticommute(x, y):
            sign = -sign
    return sign == 1


def anticommutes(a: PauliString, b: PauliString) -> bool:
    return not commutes(a, b)


def transposition_sign(a: PauliString) -> int:
    """Sign s with T(sigma_a) = s * sigma_a; -1 iff an odd number of y factors."""
    sign = 1
    for x in a:
        _check_index(x)
        sign *= EPSILON[x]
    return sign


@lru_cache(maxsize=None)
def dense(a: PauliString, exact: bool = True) -> DenseMatrix:
    """The 2^n-dimensional matrix of a string as a Kronecker product."""
    if len(a) == 0:
        raise ValueError("empty Pauli string")
    out = DenseMatrix(_SINGLE[a[0]], True)
    for x in a[1:]:
        _check_index(x)
        out = out.kron(DenseMatrix(_SINGLE[x], True))
    if exact:
        return out
    return DenseMatrix(out.to_float(), False)


def tau(t: LatticePoint, p: LatticePoint) -> LatticePoint:
    """Lattice translation induced by multiplication with the string at t.

    Involutive, and tau(t, t) = (0, 0).
    """
    return (_PROD_INDEX[t[0]][p[0]], _PROD_INDEX[t[1]][p[1]])


# -- the 4x4 lattice --------------------------------------------------------

def point_bit(p: LatticePoint) -> int:
    """Bit position of a lattice point in a 16-bit pattern mask."""
    return 4 * p[1] + p[0]


def bit_point(bit: int) -> LatticePoint:
    return (bit & 3, bit >> 2)


#: All 16 lattice points in mask bit order.
L16 = tuple(bit_point(b) for b in range(16))


def points_mask(points: Iterable[LatticePoint]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << point_bit(p)
    return mask

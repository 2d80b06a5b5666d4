"""The special-quadruple catalog and its structure theory.

A special quadruple is a 4-point subset of L16 whose Pauli strings,
after translating one member to the origin, pairwise commute; such a set
admits vectors psi, phi with |<phi|sigma_p|psi>| = 1 on all four points,
which saturates the block-positivity bound and makes the associated
rank-4 lattice state separable.

The full catalog has 60 members, 15 through every lattice point.  It is
built once at import and shared read-only; certificates refer to
quadruples by catalog index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exactmath import GR_ONE, DenseMatrix, matvec
from .pauli import (L16, LatticePoint, anticommutes, commutes, dense,
                    point_bit, points_mask, tau)

# The 15 quadruples through the origin, origin omitted, in the customary
# 3-column order: rectangles first, permutation diagonals last.
_Q00_TRIPLES = (
    ((0, 1), (1, 0), (1, 1)),
    ((0, 2), (2, 0), (2, 2)),
    ((0, 3), (3, 0), (3, 3)),
    ((1, 1), (2, 2), (3, 3)),
    ((1, 2), (2, 3), (3, 1)),
    ((0, 1), (2, 1), (2, 0)),
    ((0, 2), (1, 2), (1, 0)),
    ((0, 3), (1, 3), (1, 0)),
    ((1, 1), (2, 3), (3, 2)),
    ((1, 3), (2, 2), (3, 1)),
    ((0, 1), (3, 1), (3, 0)),
    ((0, 2), (3, 2), (3, 0)),
    ((0, 3), (2, 3), (2, 0)),
    ((1, 2), (2, 1), (3, 3)),
    ((1, 3), (2, 1), (3, 2)),
)


@dataclass(frozen=True)
class Quadruple:
    """Four lattice points forming a special quadruple, sorted by bit index."""

    points: tuple[LatticePoint, LatticePoint, LatticePoint, LatticePoint]
    mask: int

    @staticmethod
    def of(points) -> "Quadruple":
        pts = tuple(sorted(points, key=point_bit))
        if len(pts) != 4 or len(set(pts)) != 4:
            raise ValueError("a quadruple needs 4 distinct points")
        return Quadruple(pts, points_mask(pts))

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return p in self.points


def q00_catalog() -> tuple[Quadruple, ...]:
    """The 15 special quadruples through (0,0)."""
    return tuple(Quadruple.of(t + ((0, 0),)) for t in _Q00_TRIPLES)


@dataclass(frozen=True)
class QuadrupleCatalog:
    """All 60 special quadruples plus the through-point index."""

    all: tuple[Quadruple, ...]
    through: dict  # LatticePoint -> tuple[int, ...]

    def masks(self) -> tuple[int, ...]:
        return tuple(q.mask for q in self.all)

    def index_of(self, points) -> int:
        key = frozenset(points)
        return _catalog_index()[key]


@lru_cache(maxsize=1)
def catalog_all() -> QuadrupleCatalog:
    """Deduplicated union of the 16 lattice translates of the origin catalog."""
    seen = {}
    for t in L16:
        for q in q00_catalog():
            quad = Quadruple.of(tuple(tau(t, p) for p in q))
            seen[quad.points] = quad
    ordered = tuple(sorted(seen.values(), key=lambda q: tuple(point_bit(p) for p in q.points)))
    through = {
        p: tuple(i for i, q in enumerate(ordered) if p in q)
        for p in L16
    }
    return QuadrupleCatalog(all=ordered, through=through)


@lru_cache(maxsize=1)
def _catalog_index() -> dict:
    return {frozenset(q.points): i for i, q in enumerate(catalog_all().all)}


def is_special(points) -> bool:
    """Whether 4 distinct points form a special quadruple.

    Checked two ways that must agree: catalog membership of the translate
    through the origin, and pairwise commutation of the translated strings.
    """
    pts = tuple(points)
    if len(pts) != 4 or len(set(pts)) != 4:
        raise ValueError("need 4 distinct points")
    t = pts[0]
    translated = [tau(t, p) for p in pts]
    q00_members = {frozenset(q.points) for q in q00_catalog()}
    by_catalog = frozenset(translated) in q00_members
    nonzero = [p for p in translated if p != (0, 0)]
    by_commutation = len(nonzero) == 3 and all(
        commutes(a, b) for a, b in itertools.combinations(nonzero, 2))
    assert by_catalog == by_commutation, (pts, by_catalog, by_commutation)
    return by_catalog


def quadruples_inside(pattern) -> tuple[Quadruple, ...]:
    """All catalog quadruples entirely contained in the pattern."""
    mask = pattern.mask
    return tuple(q for q in catalog_all().all if q.mask & mask == q.mask)


def quadruple_indices_inside(mask: int) -> list[int]:
    cat = catalog_all()
    return [i for i, q in enumerate(cat.all) if q.mask & mask == q.mask]


def quadruple_free_point(pattern) -> LatticePoint | None:
    """A pattern point with no catalog quadruple through it inside the pattern.

    Such a point certifies entanglement of the lattice state.  Scans in
    bit order; returns None when every point is covered.
    """
    cat = catalog_all()
    mask = pattern.mask
    for p in L16:
        if not mask >> point_bit(p) & 1:
            continue
        if not any(cat.all[i].mask & mask == cat.all[i].mask for i in cat.through[p]):
            return p
    return None


def saturating_vectors(quad: Quadruple) -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors (psi, phi) with |<phi|sigma_p|psi>| = 1 on all of quad.

    Construction: translate the quadruple so it contains the origin, build
    the joint +1 eigenvector of the first two commuting non-origin strings
    by multiplying the spectral projectors (1 + sigma)/2 (the sign of the
    third string is then forced), and untranslate with phi = sigma_t psi.
    Everything up to the final normalization is exact.
    """
    if not is_special(quad.points):
        raise ValueError("not a special quadruple")
    t = quad.points[0]
    translated = [tau(t, p) for p in quad.points]
    strings = [p for p in translated if p != (0, 0)]
    proj = DenseMatrix.identity(4)
    for s in strings[:2]:
        proj = proj @ (DenseMatrix.identity(4) + dense(s)).scaled(Fraction(1, 2))
    psi_exact = None
    for k in range(4):
        seed = tuple(GR_ONE if i == k else GR_ONE - GR_ONE for i in range(4))
        candidate = matvec(proj, seed)
        if any(not v.is_zero() for v in candidate):
            psi_exact = candidate
            break
    assert psi_exact is not None, "joint eigenprojector is nonzero on some basis vector"
    psi = np.array([complex(v) for v in psi_exact])
    psi = psi / np.linalg.norm(psi)
    phi = dense(t, exact=False).to_float() @ psi
    return psi, phi


def saturation_value(pattern_points, psi: np.ndarray, phi: np.ndarray) -> float:
    """(1/4) sum over the points of |<phi|sigma_p|psi>|^2."""
    total = 0.0
    for p in pattern_points:
        amp = np.vdot(phi, dense(p, exact=False).to_float() @ psi)
        total += abs(amp) ** 2
    return total / 4.0


# -- structure of the complement -------------------------------------------

def _anticommuting_templates() -> tuple[frozenset, ...]:
    """The six maximal anticommuting families: a two-point line stub on the
    zero row or column plus a full perpendicular triple."""
    out = []
    for k in (1, 2, 3):
        i, j = [x for x in (1, 2, 3) if x != k]
        out.append(frozenset({(0, i), (0, j), (1, k), (2, k), (3, k)}))
        out.append(frozenset({(i, 0), (j, 0), (k, 1), (k, 2), (k, 3)}))
    return tuple(out)


K_TEMPLATES = _anticommuting_templates()


def matches_k_template(points) -> bool:
    """Whether a 5-point set is one of the K templates (either orientation)."""
    return frozenset(points) in K_TEMPLATES


def max_anticommuting_subset(points: list[LatticePoint]) -> list[LatticePoint]:
    """A maximum pairwise-anticommuting subset, by branch and bound.

    Input sizes never exceed 15, so the exact search is immediate.
    """
    pts = sorted(points, key=point_bit)
    best: list[LatticePoint] = []

    def extend(chosen, rest):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for idx, p in enumerate(rest):
            if len(chosen) + len(rest) - idx <= len(best):
                break
            if all(anticommutes(p, q) for q in chosen):
                extend(chosen + [p], rest[idx + 1:])

    extend([], pts)
    return best


@dataclass(frozen=True)
class ComplementAnalysis:
    """Structure report for the complement after centering a quadruple-free point."""

    free_point: LatticePoint
    complement_size: int
    max_anticommuting_set: tuple[LatticePoint, ...]
    has_k1_or_k2_form: bool
    has_3plus1_structure: bool


def analyze_complement(pattern) -> ComplementAnalysis:
    """Anticommutation structure of the complement, seen from a free point.

    Translates a quadruple-free point to the origin first; raises
    ValueError when the pattern has none (the analysis is defined relative
    to one).
    """
    free = quadruple_free_point(pattern)
    if free is None:
        raise ValueError("pattern has no quadruple-free point")
    translated = {tau(free, p) for p in pattern.points}
    complement = [p for p in L16 if p not in translated]
    biggest = max_anticommuting_subset(complement)
    has_k = False
    if len(biggest) >= 5:
        has_k = any(
            matches_k_template(c)
            for c in itertools.combinations(complement, 5)
            if all(anticommutes(a, b) for a, b in itertools.combinations(c, 2)))
    has_3plus1 = False
    for trio in itertools.combinations(complement, 3):
        if not all(anticommutes(a, b) for a, b in itertools.combinations(trio, 2)):
            continue
        for extra in complement:
            if extra in trio:
                continue
            commuting = sum(1 for q in trio if commutes(extra, q))
            if commuting == 1:
                has_3plus1 = True
                break
        if has_3plus1:
            break
    return ComplementAnalysis(
        free_point=free,
        complement_size=len(complement),
        max_anticommuting_set=tuple(biggest),
        has_k1_or_k2_form=has_k,
        has_3plus1_structure=has_3plus1,
    )

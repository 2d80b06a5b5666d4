"""Separability certification by uniform coverings of special quadruples.

A pattern is certified separable exactly when the feasibility problem

    x_Q >= 0 for every catalog quadruple Q inside the pattern,
    sum over Q through p of x_Q = 1   for every pattern point p,

has a solution; the convex weights c_Q = 4 x_Q / N then decompose the
lattice state into rank-4 separable quadruple states.  The solve runs a
phase-1 simplex over exact rationals with Bland's anti-cycling rule, so a
"feasible" answer always ships a certificate that verifies exactly and an
"infeasible" answer is a completed phase-1 optimum, never a tolerance
call.

Integer set coverings (each quadruple used at most once, every point
covered the same number of times) are searched separately: they are the
stricter notion, and the census records both flags because they genuinely
differ on a handful of orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .pauli import point_bit
from .patterns import Pattern
from .quadruples import catalog_all, quadruple_indices_inside


@dataclass(frozen=True)
class Covering:
    """A verified-by-construction convex covering certificate.

    weights are the convex coefficients c_j (summing to 1); counts, when
    present, give the integer uniform covering (multiplicity and
    cardinality satisfy 4 * cardinality = multiplicity * N).
    """

    quadruple_indices: tuple[int, ...]
    weights: tuple[Fraction, ...]
    counts: Optional[tuple[int, ...]] = None
    multiplicity: Optional[int] = None
    cardinality: Optional[int] = None

    def as_json(self) -> dict:
        cat = catalog_all()
        quads = []
        for pos, (i, w) in enumerate(zip(self.quadruple_indices, self.weights)):
            entry = {
                "index": i,
                "points": [list(p) for p in cat.all[i].points],
                "weight": str(w),
            }
            if self.counts is not None:
                entry["count"] = self.counts[pos]
            quads.append(entry)
        return {
            "quadruples": quads,
            "multiplicity": self.multiplicity,
            "cardinality": self.cardinality,
        }


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    covering: Optional[Covering] = None


def _phase1_simplex(point_bits: list[int], quad_indices: list[int]) -> Optional[dict]:
    """Solve sum_{Q through p} x_Q = 1, x >= 0 exactly.

    Returns {quadruple index: positive Fraction} or None when infeasible.
    Bland's rule: entering variable is the lowest-index column with a
    favorable reduced cost, leaving row breaks ratio ties by lowest basis
    index, so the run is deterministic and never cycles.
    """
    cat = catalog_all()
    m = len(point_bits)
    k = len(quad_indices)
    if k == 0:
        return None
    width = k + m + 1
    one = Fraction(1)
    rows = []
    for r, pb in enumerate(point_bits):
        row = [Fraction(0)] * width
        for c, qi in enumerate(quad_indices):
            if cat.all[qi].mask >> pb & 1:
                row[c] = one
        row[k + r] = one
        row[-1] = one
        rows.append(row)
    basis = [k + r for r in range(m)]
    # phase-1 objective row: reduced costs of minimizing the artificial sum,
    # stored as z_j - c_j (enter while positive)
    obj = [Fraction(0)] * width
    for row in rows:
        for j in range(width):
            obj[j] += row[j]
    for j in range(k, k + m):
        obj[j] -= one

    while True:
        enter = next((j for j in range(k + m) if obj[j] > 0), None)
        if enter is None:
            break
        best = None
        for r in range(m):
            coef = rows[r][enter]
            if coef > 0:
                ratio = rows[r][-1] / coef
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < best[1]):
                    best = (ratio, basis[r], r)
        if best is None:
            raise RuntimeError("phase-1 objective is bounded; unbounded pivot impossible")
        r = best[2]
        pivot = rows[r][enter]
        rows[r] = [v / pivot for v in rows[r]]
        prow = rows[r]
        for rr in range(m):
            if rr != r:
                f = rows[rr][enter]
                if f:
                    rows[rr] = [a - f * b for a, b in zip(rows[rr], prow)]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, prow)]
        basis[r] = enter

    if obj[-1] != 0:
        return None
    solution: dict[int, Fraction] = {}
    for r in range(m):
        if basis[r] < k and rows[r][-1] != 0:
            solution[quad_indices[basis[r]]] = rows[r][-1]
    return solution


def find_integer_uniform_covering(pattern: Pattern,
                                  node_cap: int = 2_000_000) -> Optional[tuple[int, list[int]]]:
    """Smallest-multiplicity integer set covering, or None.

    Exhaustive depth-first search over quadruple subsets, most-constrained
    point first, with the standard include/exclude deduplication; within
    the node cap the None answer is a proof of nonexistence.
    """
    cat = catalog_all()
    pts = [point_bit(p) for p in pattern.points]
    qs = quadruple_indices_inside(pattern.mask)
    if not qs:
        return None
    n = len(pts)
    step = 4 // math.gcd(4, n)
    max_mult = min(sum(1 for i in qs if cat.all[i].mask >> pb & 1) for pb in pts)
    nodes = 0
    for mult in range(step, max_mult + 1, step):
        cover = {pb: 0 for pb in pts}
        chosen: list[int] = []

        def dfs(available: list[int]) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > node_cap:
                raise RecursionError("node cap exceeded")
            deficit = [pb for pb in pts if cover[pb] < mult]
            if not deficit:
                return True

            def candidates(pb):
                return [i for i in available if cat.all[i].mask >> pb & 1]

            target = min(deficit, key=lambda pb: len(candidates(pb)))
            cands = candidates(target)
            if cover[target] + len(cands) < mult:
                return False
            remaining = list(available)
            for i in cands:
                bits = [point_bit(p) for p in cat.all[i].points]
                if any(cover[pb] + 1 > mult for pb in bits):
                    continue
                for pb in bits:
                    cover[pb] += 1
                chosen.append(i)
                if dfs([j for j in remaining if j != i]):
                    return True
                chosen.pop()
                for pb in bits:
                    cover[pb] -= 1
                remaining.remove(i)
            return False

        try:
            if dfs(qs):
                return mult, sorted(chosen)
        except RecursionError:
            return None
    return None


def find_uniform_covering(pattern: Pattern,
                          integer_search: bool = True) -> FeasibilityResult:
    """Exact covering feasibility with a certificate.

    Prefers the minimal integer set covering when one exists (its convex
    weights are 1/cardinality each); otherwise ships the simplex vertex,
    scaled to integers over a common denominator.  Raises ValueError for
    patterns too small to contain a quadruple.
    """
    n = pattern.n_points
    if n < 4:
        raise ValueError("no quadruple fits in a pattern of fewer than 4 points")
    point_bits = [point_bit(p) for p in pattern.points]
    quad_indices = quadruple_indices_inside(pattern.mask)
    solution = _phase1_simplex(point_bits, quad_indices)
    if solution is None:
        return FeasibilityResult(False, None)

    if integer_search:
        integral = find_integer_uniform_covering(pattern)
        if integral is not None:
            mult, indices = integral
            card = len(indices)
            weight = Fraction(1, card)
            return FeasibilityResult(True, Covering(
                quadruple_indices=tuple(indices),
                weights=(weight,) * card,
                counts=(1,) * card,
                multiplicity=mult,
                cardinality=card,
            ))

    indices = tuple(sorted(solution))
    xs = [solution[i] for i in indices]
    denom = math.lcm(*(x.denominator for x in xs))
    counts = tuple(int(x * denom) for x in xs)
    cardinality = sum(counts)
    weights = tuple(4 * x / n for x in xs)
    return FeasibilityResult(True, Covering(
        quadruple_indices=indices,
        weights=weights,
        counts=counts,
        multiplicity=denom,
        cardinality=cardinality,
    ))


def verify_decomposition(pattern: Pattern, covering: Covering) -> bool:
    """Exact check of the convex decomposition in coefficient space.

    Since all the states involved are diagonal in the same basis, the
    matrix identity holds exactly when, for every lattice point, the
    weighted coverage equals 1/N inside the pattern and 0 outside; the
    weights must also be positive and sum to 1.
    """
    cat = catalog_all()
    if len(covering.quadruple_indices) != len(covering.weights):
        return False
    if any(w <= 0 for w in covering.weights):
        return False
    if sum(covering.weights, Fraction(0)) != 1:
        return False
    if any(cat.all[i].mask & pattern.mask != cat.all[i].mask
           for i in covering.quadruple_indices):
        return False
    n = pattern.n_points
    quarter = Fraction(1, 4)
    for b in range(16):
        acc = Fraction(0)
        for i, w in zip(covering.quadruple_indices, covering.weights):
            if cat.all[i].mask >> b & 1:
                acc += w * quarter
        expected = Fraction(1, n) if pattern.mask >> b & 1 else Fraction(0)
        if acc != expected:
            return False
    if covering.multiplicity is not None and covering.cardinality is not None:
        if not covering_relation_check(n, covering.multiplicity, covering.cardinality):
            return False
    return True


def covering_relation_check(n_points: int, multiplicity: int, cardinality: int) -> bool:
    """The double-counting identity 4 * cardinality = multiplicity * N."""
    if n_points <= 0 or multiplicity <= 0 or cardinality <= 0:
        return False
    return 4 * cardinality == multiplicity * n_points

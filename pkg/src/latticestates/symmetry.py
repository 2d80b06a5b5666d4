"""Pattern symmetries that preserve the special-quadruple catalog.

Candidate elements combine a lattice translation with independent row and
column permutations.  An element is kept exactly when it maps every
catalog quadruple onto a catalog quadruple; classification is invariant
under the validated group because every criterion in this package is
built from row/column counts and the catalog.

Translations act coordinatewise through the Pauli product, so they are
themselves permutation pairs; the validated group turns out to be the
full product of column and row permutations, of order 576.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .pauli import L16, point_bit, product_index
from .patterns import Pattern
from .quadruples import catalog_all


@dataclass(frozen=True)
class SymmetryElement:
    """A validated pattern symmetry: translate, then permute columns and rows."""

    translation: tuple[int, int]
    col_perm: tuple[int, int, int, int]
    row_perm: tuple[int, int, int, int]
    # composed per-coordinate maps, after folding the translation in
    col_map: tuple[int, int, int, int] = field(compare=False)
    row_map: tuple[int, int, int, int] = field(compare=False)

    @staticmethod
    def build(translation, col_perm, row_perm) -> "SymmetryElement":
        ta, tb = translation
        col_map = tuple(col_perm[product_index(ta, a)] for a in range(4))
        row_map = tuple(row_perm[product_index(tb, b)] for b in range(4))
        return SymmetryElement(tuple(translation), tuple(col_perm), tuple(row_perm),
                               col_map, row_map)

    def apply_point(self, p):
        return (self.col_map[p[0]], self.row_map[p[1]])

    def apply_mask(self, mask: int) -> int:
        out = 0
        for b in range(16):
            if mask >> b & 1:
                out |= 1 << point_bit(self.apply_point((b & 3, b >> 2)))
        return out

    def inverse(self) -> "SymmetryElement":
        inv_col = [0] * 4
        inv_row = [0] * 4
        for a in range(4):
            inv_col[self.col_map[a]] = a
        for b in range(4):
            inv_row[self.row_map[b]] = b
        return SymmetryElement((0, 0), tuple(inv_col), tuple(inv_row),
                               tuple(inv_col), tuple(inv_row))


@lru_cache(maxsize=1)
def symmetry_group() -> tuple[SymmetryElement, ...]:
    """Candidates filtered by catalog preservation, deduplicated by action."""
    catalog_masks = set(catalog_all().masks())
    perms = list(itertools.permutations(range(4)))
    kept: dict[tuple, SymmetryElement] = {}
    for translation in L16:
        for col_perm in perms:
            for row_perm in perms:
                elem = SymmetryElement.build(translation, col_perm, row_perm)
                key = (elem.col_map, elem.row_map)
                if key in kept:
                    continue
                if all(elem.apply_mask(m) in catalog_masks for m in catalog_masks):
                    kept[key] = elem
    return tuple(kept.values())


def apply_symmetry(element: SymmetryElement, pattern: Pattern) -> Pattern:
    return Pattern(element.apply_mask(pattern.mask))


def canonical_form(pattern: Pattern) -> Pattern:
    """Minimal mask over the validated group orbit; constant on orbits."""
    return Pattern(min(e.apply_mask(pattern.mask) for e in symmetry_group()))


def canonical_form_with_element(pattern: Pattern) -> tuple[Pattern, SymmetryElement]:
    """Canonical form plus one element realizing it."""
    best_mask = None
    best_elem = None
    for e in symmetry_group():
        m = e.apply_mask(pattern.mask)
        if best_mask is None or m < best_mask:
            best_mask, best_elem = m, e
    return Pattern(best_mask), best_elem


def orbit(pattern: Pattern) -> tuple[Pattern, ...]:
    return tuple(Pattern(m) for m in
                 sorted({e.apply_mask(pattern.mask) for e in symmetry_group()}))


@lru_cache(maxsize=1)
def canonical_table() -> np.ndarray:
    """Canonical mask for every 16-bit mask, vectorized with byte tables.

    Used by the census; a full pass over all masks costs well under a
    second this way.
    """
    group = symmetry_group()
    all_masks = np.arange(65536, dtype=np.uint32)
    canon = all_masks.copy()
    for e in group:
        bitmap = [point_bit(e.apply_point((b & 3, b >> 2))) for b in range(16)]
        lo = np.zeros(256, dtype=np.uint32)
        hi = np.zeros(256, dtype=np.uint32)
        for v in range(256):
            x = y = 0
            for i in range(8):
                if v >> i & 1:
                    x |= 1 << bitmap[i]
                    y |= 1 << bitmap[8 + i]
            lo[v] = x
            hi[v] = y
        np.minimum(canon, lo[all_masks & 255] | hi[all_masks >> 8], out=canon)
    return canon

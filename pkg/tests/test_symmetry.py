"""Validated symmetry group: catalog preservation, orbits, canonical forms."""

import random

from latticestates.fixtures import FIXTURES
from latticestates.patterns import (Pattern, ppt_combinatorial,
                                    prop_ppt2_point, prop_ppt3_point)
from latticestates.quadruples import catalog_all, quadruple_free_point
from latticestates.symmetry import (SymmetryElement, apply_symmetry,
                                    canonical_form, canonical_form_with_element,
                                    canonical_table, orbit, symmetry_group)

IDENTITY = SymmetryElement.build((0, 0), (0, 1, 2, 3), (0, 1, 2, 3))


class TestGroup:
    def test_group_order(self):
        # every row/column permutation pair preserves the catalog, and the
        # translations are themselves such pairs
        assert len(symmetry_group()) == 576

    def test_contains_identity(self):
        assert any(e.col_map == (0, 1, 2, 3) and e.row_map == (0, 1, 2, 3)
                   for e in symmetry_group())

    def test_every_element_preserves_the_catalog(self):
        masks = set(catalog_all().masks())
        rng = random.Random(7)
        for e in rng.sample(list(symmetry_group()), 40):
            assert {e.apply_mask(m) for m in masks} == masks

    def test_closed_under_composition(self):
        rng = random.Random(11)
        group = symmetry_group()
        actions = {(e.col_map, e.row_map) for e in group}
        for _ in range(50):
            a, b = rng.choice(group), rng.choice(group)
            col = tuple(a.col_map[b.col_map[x]] for x in range(4))
            row = tuple(a.row_map[b.row_map[x]] for x in range(4))
            assert (col, row) in actions

    def test_inverse_undoes(self):
        rng = random.Random(13)
        for e in rng.sample(list(symmetry_group()), 20):
            inv = e.inverse()
            for mask in (0x0001, 0x1234, 0xBEEF):
                assert inv.apply_mask(e.apply_mask(mask)) == mask


class TestApply:
    def test_identity(self):
        assert apply_symmetry(IDENTITY, FIXTURES["eq15"]) == FIXTURES["eq15"]

    def test_translation_self_annihilates(self):
        e = SymmetryElement.build((1, 2), (0, 1, 2, 3), (0, 1, 2, 3))
        assert apply_symmetry(e, Pattern.from_points([(1, 2)])) == \
            Pattern.from_points([(0, 0)])

    def test_size_preserved(self):
        rng = random.Random(17)
        for _ in range(30):
            p = Pattern(rng.randrange(1, 65536))
            e = rng.choice(symmetry_group())
            assert apply_symmetry(e, p).n_points == p.n_points


class TestCanonical:
    def test_idempotent(self):
        rng = random.Random(19)
        for _ in range(30):
            p = Pattern(rng.randrange(1, 65536))
            c = canonical_form(p)
            assert canonical_form(c) == c

    def test_singletons_share_one_orbit(self):
        canon = {canonical_form(Pattern(1 << b)).mask for b in range(16)}
        assert canon == {1}  # the point (0,0)

    def test_translate_same_canonical(self):
        e = SymmetryElement.build((1, 2), (0, 1, 2, 3), (0, 1, 2, 3))
        p = FIXTURES["eq13a"]
        assert canonical_form(p) == canonical_form(apply_symmetry(e, p))

    def test_with_element_realizes_the_form(self):
        rng = random.Random(23)
        for _ in range(20):
            p = Pattern(rng.randrange(1, 65536))
            c, e = canonical_form_with_element(p)
            assert apply_symmetry(e, p) == c

    def test_table_matches_single_calls(self):
        table = canonical_table()
        rng = random.Random(29)
        for _ in range(100):
            mask = rng.randrange(1, 65536)
            assert int(table[mask]) == canonical_form(Pattern(mask)).mask


class TestInvariance:
    def test_criteria_constant_on_orbits(self):
        rng = random.Random(31)
        for _ in range(8):
            p = Pattern(rng.randrange(1, 65536))
            reference = (
                ppt_combinatorial(p)[0],
                prop_ppt2_point(p) is not None,
                prop_ppt3_point(p) is not None,
                quadruple_free_point(p) is not None,
            )
            for q in orbit(p):
                assert (
                    ppt_combinatorial(q)[0],
                    prop_ppt2_point(q) is not None,
                    prop_ppt3_point(q) is not None,
                    quadruple_free_point(q) is not None,
                ) == reference

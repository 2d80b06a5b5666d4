"""Exact covering feasibility, certificates, and the integer set search."""

from fractions import Fraction

import pytest

from latticestates.coverings import (Covering, covering_relation_check,
                                     find_integer_uniform_covering,
                                     find_uniform_covering,
                                     verify_decomposition)
from latticestates.fixtures import FIXTURES
from latticestates.patterns import Pattern
from latticestates.quadruples import catalog_all


class TestFeasibleFixtures:
    def test_ten_point_pattern_multiplicity_two(self):
        result = find_uniform_covering(FIXTURES["eq23"])
        assert result.feasible
        cov = result.covering
        assert cov.multiplicity == 2
        assert cov.cardinality == 5
        assert cov.counts == (1,) * 5
        assert sum(cov.weights) == 1
        assert verify_decomposition(FIXTURES["eq23"], cov)

    def test_rank8_block(self):
        result = find_uniform_covering(FIXTURES["rank8"])
        assert result.feasible
        assert result.covering.multiplicity == 2
        assert result.covering.cardinality == 4
        assert verify_decomposition(FIXTURES["rank8"], result.covering)

    def test_rank8_explicit_rectangles(self):
        # the four displayed rectangles cover the block uniformly twice
        cat = catalog_all()
        rects = [
            [(1, 1), (2, 1), (1, 3), (2, 3)],
            [(1, 1), (3, 1), (1, 2), (3, 2)],
            [(2, 1), (3, 1), (2, 3), (3, 3)],
            [(1, 2), (3, 2), (1, 3), (3, 3)],
        ]
        indices = tuple(cat.index_of(r) for r in rects)
        cov = Covering(indices, (Fraction(1, 4),) * 4, (1,) * 4, 2, 4)
        assert verify_decomposition(FIXTURES["rank8"], cov)

    def test_appendix_patterns(self):
        for name, mult, card in (("appb1", 4, 9), ("appb2", 2, 4)):
            result = find_uniform_covering(FIXTURES[name])
            assert result.feasible
            assert result.covering.multiplicity == mult
            assert result.covering.cardinality == card
            assert verify_decomposition(FIXTURES[name], result.covering)

    def test_full_lattice_partitions(self):
        result = find_uniform_covering(Pattern(0xFFFF))
        assert result.feasible
        assert result.covering.multiplicity == 1
        assert result.covering.cardinality == 4
        assert verify_decomposition(Pattern(0xFFFF), result.covering)

    def test_every_quadruple_is_its_own_covering(self):
        for q in catalog_all().all:
            pattern = Pattern(q.mask)
            result = find_uniform_covering(pattern)
            assert result.feasible
            assert result.covering.cardinality == 1
            assert result.covering.multiplicity == 1
            assert result.covering.weights == (Fraction(1),)
            assert verify_decomposition(pattern, result.covering)


class TestInfeasibleFixtures:
    def test_npt_pattern(self):
        result = find_uniform_covering(FIXTURES["eq13b"])
        assert not result.feasible
        assert result.covering is None

    def test_quadruple_free_pattern(self):
        # a quadruple-free point leaves an uncoverable constraint
        assert not find_uniform_covering(FIXTURES["eq15"]).feasible
        assert not find_uniform_covering(FIXTURES["eq14b"]).feasible

    def test_too_small(self):
        with pytest.raises(ValueError):
            find_uniform_covering(Pattern.from_points([(0, 0), (1, 1)]))


class TestRank11:
    def test_lp_feasible_but_no_set_covering(self):
        pattern = FIXTURES["rank11"]
        result = find_uniform_covering(pattern)
        assert result.feasible
        assert verify_decomposition(pattern, result.covering)
        # the scaled vertex uses one quadruple twice: a genuine multiset
        assert result.covering.multiplicity == 4
        assert result.covering.cardinality == 11
        assert sorted(result.covering.counts, reverse=True)[0] == 2
        assert find_integer_uniform_covering(pattern) is None

    def test_verified_weights_sum_to_one(self):
        cov = find_uniform_covering(FIXTURES["rank11"]).covering
        assert sum(cov.weights) == 1
        assert all(w > 0 for w in cov.weights)


class TestVerification:
    def test_perturbed_weight_fails(self):
        cov = find_uniform_covering(FIXTURES["eq23"]).covering
        bumped = list(cov.weights)
        bumped[0] += Fraction(1, 1000)
        bad = Covering(cov.quadruple_indices, tuple(bumped),
                       cov.counts, cov.multiplicity, cov.cardinality)
        assert not verify_decomposition(FIXTURES["eq23"], bad)

    def test_quadruple_outside_pattern_fails(self):
        cov = find_uniform_covering(FIXTURES["eq23"]).covering
        outside = Covering((0,) + cov.quadruple_indices[1:], cov.weights,
                           None, None, None)
        assert not verify_decomposition(FIXTURES["eq23"], outside)

    def test_relation_check(self):
        assert covering_relation_check(10, 2, 5)
        assert covering_relation_check(8, 2, 4)
        assert not covering_relation_check(9, 2, 5)
        assert not covering_relation_check(0, 1, 1)


class TestIntegerSearch:
    def test_minimal_multiplicity_on_fixtures(self):
        assert find_integer_uniform_covering(FIXTURES["eq23"])[0] == 2
        assert find_integer_uniform_covering(FIXTURES["rank8"])[0] == 2
        assert find_integer_uniform_covering(FIXTURES["appb1"])[0] == 4
        assert find_integer_uniform_covering(Pattern(0xFFFF))[0] == 1

    def test_solutions_are_sets_with_uniform_coverage(self):
        cat = catalog_all()
        for name in ("eq23", "rank8", "appb1", "appb2"):
            pattern = FIXTURES[name]
            mult, indices = find_integer_uniform_covering(pattern)
            assert len(set(indices)) == len(indices)
            for p in pattern.points:
                coverage = sum(1 for i in indices if p in cat.all[i].points)
                assert coverage == mult

    def test_quadruple_sparse_pattern_has_none(self):
        assert find_integer_uniform_covering(FIXTURES["eq15"]) is None

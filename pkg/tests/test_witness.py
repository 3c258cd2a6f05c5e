# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balsys.contrib.catalog import make_system
from balsys.contrib.errors import DegenerateListError
from balsys.contrib.witness import (
    SolutionTuple,
    ann_bal,
    annihilator_contained,
    check_pairwise_disjoint,
    class_preserving_relations,
    classify_tuple,
    disjoint,
    has_class_property,
    is_generic,
    is_linearly_generic,
    linear_annihilator,
    partition_pattern,
    preserving_annihilator,
)
from balsys.core.algebra import affine_dim
from balsys.core.errors import DimensionError
from balsys.core.field import fq_init


class TestAnnihilators:
    def test_ann_bal_line(self, F3):
        assert ann_bal([(0,), (1,), (2,)], F3) == [(1, 1, 1)]
        assert len(linear_annihilator([(0,), (1,), (2,)], F3)) == 2

    def test_ann_bal_constant(self, F5):
        assert len(ann_bal([(3, 1)] * 4, F5)) == 3

    def test_dimension_identity(self, F5):
        for points in ([(0, 0), (1, 2), (3, 3)], [(1, 1)] * 3, [(0, 0), (1, 0), (0, 1), (4, 4)]):
            assert len(ann_bal(points, F5)) + affine_dim(points, F5) == len(points) - 1

    def test_contained(self, F5):
        assert annihilator_contained([(0,), (1,), (2,)], [(1,), (2,), (3,)], F5)
        assert not annihilator_contained([(0,), (0,), (1,)], [(0,), (1,), (2,)], F5)


class TestPartition:
    def test_pattern(self):
        pattern = partition_pattern([(0,), (1,), (0,), (2,)])
        assert pattern.parts == ((0, 2), (1,), (3,))
        assert pattern.lam == 3
        assert pattern.same_part(0, 2)
        assert not pattern.same_part(0, 1)
        assert pattern._as_dict() == [[0, 2], [1], [3]]

    def test_disjoint(self):
        assert disjoint([(0, 1), (1, 1)], [(2, 2)])
        assert not disjoint([(0, 1)], [(2, 2), (0, 1)])
        with pytest.raises(DimensionError):
            disjoint([(0, 1)], [(0,)])

    def test_pairwise(self):
        check_pairwise_disjoint([[(0,), (1,)], [(2,)], [(3,), (3,)]])
        with pytest.raises(DegenerateListError):
            check_pairwise_disjoint([[(0,), (1,)], [(2,)], [(1,)]])


class TestSolutionTuple:
    def test_length_checked(self, three_ap_F3):
        with pytest.raises(DimensionError):
            SolutionTuple(three_ap_F3, [(0,), (1,)])

    def test_properties(self, three_ap_F3):
        t = SolutionTuple(three_ap_F3, [(0, 0), (1, 0), (2, 0)])
        assert t.is_solution
        assert (t.k, t.n) == (3, 2)
        assert t.affine_dim == 1
        assert t.distinct == 3
        assert t.with_entries({2: (0, 0)}).distinct == 2
        assert t == SolutionTuple(three_ap_F3, [[0, 0], [1, 0], [2, 0]])
        assert t._as_dict()["tuple"] == [[0, 0], [1, 0], [2, 0]]


class TestClassifyTuple:
    def test_generic_progression(self, three_ap_F3):
        flags = classify_tuple(three_ap_F3, [(0, 0), (1, 0), (2, 0)])
        assert flags.solution and flags.nontrivial and flags.shape and flags.generic
        assert not flags.linearly_generic

    def test_linearly_generic(self, three_ap_F3):
        points = [(1, 0), (2, 1), (0, 2)]
        assert is_generic(three_ap_F3, points)
        assert is_linearly_generic(three_ap_F3, points)

    def test_trivial(self, three_ap_F3):
        flags = classify_tuple(three_ap_F3, [(1,), (1,), (1,)])
        assert flags.solution
        assert not (flags.nontrivial or flags.shape or flags.generic)

    def test_non_solution(self, three_ap_F3):
        flags = classify_tuple(three_ap_F3, [(0,), (0,), (1,)])
        assert flags == (False, True, False, False, False)

    def test_star_needs_dimension_two(self, F5):
        A = make_system("star", F5)
        assert not is_generic(A, [(0,), (2,), (3,), (4,), (1,)])
        assert is_generic(A, [(1, 0), (4, 0), (0, 1), (0, 4), (0, 0)])

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
    def test_generic_tests_agree(self, coords):
        ctx = fq_init(5)
        A = make_system("ap", ctx)
        a, b, c, d = coords
        points = [(a, b), (c, d), ((2 * c - a) % 5, (2 * d - b) % 5)]
        expected = len({points[0], points[1]}) == 2
        assert is_generic(A, points) == expected


class TestClassProperty:
    def test_constant_star(self, F5):
        A = make_system("star", F5)
        points = [(2,)] * 5
        assert not preserving_annihilator(A, points)
        assert has_class_property(A, points)
        assert len(class_preserving_relations(A, points)) == 2

    def test_constant_w(self, F5):
        A = make_system("w", F5)
        assert not has_class_property(A, [(1,)] * 5)

# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest

from balsys.contrib.catalog import make_system
from balsys.contrib.errors import DegenerateListError, NotFoundError
from balsys.contrib.replacement import (
    collision_pairs,
    eliminate_breaking_pair,
    find_collision,
    keeps_pair,
    recombinations,
    replace_multiple,
    replace_single,
)
from balsys.contrib.system import SystemMatrix
from balsys.contrib.witness import SolutionTuple


@pytest.fixture
def two_t(F5):
    return SystemMatrix.from_signed(F5, [[1, 1, -2]])


@pytest.fixture
def disjoint_solutions(two_t):
    return [SolutionTuple(two_t, p) for p in ([(0,), (2,), (1,)], [(4,)] * 3, [(3,)] * 3)]


class TestCollisions:
    def test_binary(self, F2):
        found = find_collision(F2, [(0,), (1,)], [(0,), (1,)], 1, 1)
        assert found.anchor == 0
        assert found.pairs == [(1, 1)]

    def test_two_pairs(self, F5):
        xs, ys = [(0,), (3,), (4,)], [(2,), (4,), (3,)]
        found = find_collision(F5, xs, ys, 1, 1, t=2)
        assert found == (0, [(1, 1), (2, 2)])

    def test_anchor_excluded(self, F5):
        for i, pairs in collision_pairs(F5, [(0,), (1,), (2,)], [(0,), (1,), (2,)], 1, 1):
            assert all(i not in pair for pair in pairs)

    def test_none(self, F5):
        with pytest.raises(NotFoundError):
            find_collision(F5, [(0,), (1,)], [(0,), (2,)], 1, 1)
        assert list(collision_pairs(F5, [], [], 1, 1)) == []

    def test_empty_lists(self, F5, two_t):
        with pytest.raises(NotFoundError):
            find_collision(F5, [], [], 1, 1)
        with pytest.raises(DegenerateListError):
            find_collision(F5, [], [(1,)], 1, 1)
        with pytest.raises(NotFoundError):
            replace_single(two_t, [], 0, 1)
        with pytest.raises(NotFoundError):
            replace_multiple(two_t, [], 0, 1, 1)
        with pytest.raises(NotFoundError):
            eliminate_breaking_pair(two_t, [], 0, 1)

    def test_degenerate_lists(self, F5):
        with pytest.raises(DegenerateListError):
            find_collision(F5, [(0,), (0,)], [(1,), (2,)], 1, 1)
        with pytest.raises(DegenerateListError):
            find_collision(F5, [(0,)], [(1,), (2,)], 1, 1)
        with pytest.raises(ValueError):
            find_collision(F5, [(0,)], [(1,)], 0, 1)


class TestReplace:
    def test_single(self, two_t, disjoint_solutions):
        y = replace_single(two_t, disjoint_solutions, 0, 1)
        assert y.points == ((4,), (3,), (1,))
        assert y.is_solution

    def test_all_recombinations_are_solutions(self, two_t, disjoint_solutions):
        recs = list(recombinations(two_t, disjoint_solutions, 0, 1))
        assert [(r.anchor, r.donors) for r in recs[:2]] == [(0, (1, 2)), (0, (2, 1))]
        assert all(r.solution.is_solution for r in recs)
        for r in recs:
            assert r.anchor not in r.donors
            assert r.solution[2] == disjoint_solutions[r.anchor][2]

    def test_multiple(self, two_t, disjoint_solutions):
        i, found = replace_multiple(two_t, disjoint_solutions, 0, 1, 2)
        assert i == 0
        assert [y.points for y in found] == [((4,), (3,), (1,)), ((3,), (4,), (1,))]
        with pytest.raises(NotFoundError):
            replace_multiple(two_t, disjoint_solutions, 0, 1, 3)

    def test_rejects_overlapping(self, two_t):
        solutions = [[(0,), (2,), (1,)], [(1,)] * 3]
        with pytest.raises(DegenerateListError):
            replace_single(two_t, solutions, 0, 1)

    def test_rejects_non_solutions(self, two_t):
        with pytest.raises(DegenerateListError):
            replace_single(two_t, [[(0,), (1,), (2,)], [(3,)] * 3], 0, 1)

    def test_rejects_inequivalent_columns(self, F5):
        star = make_system("star", F5)
        with pytest.raises(ValueError):
            replace_single(star, [[(1,)] * 5, [(2,)] * 5], 0, 2)


class TestEliminate:
    def test_keeps_pair(self, two_t, disjoint_solutions):
        rec = eliminate_breaking_pair(two_t, disjoint_solutions, 0, 1)
        assert keeps_pair(two_t, rec.solution, 0, 1)
        assert not keeps_pair(two_t, disjoint_solutions[1], 0, 1)

    def test_accept(self, two_t, disjoint_solutions):
        rec = eliminate_breaking_pair(
            two_t, disjoint_solutions, 0, 1, accept=lambda y: y[0] == (3,)
        )
        assert rec.solution.points == ((3,), (4,), (1,))
        with pytest.raises(NotFoundError):
            eliminate_breaking_pair(two_t, disjoint_solutions, 0, 1, accept=lambda y: False)

    def test_empty(self, two_t):
        with pytest.raises(NotFoundError):
            eliminate_breaking_pair(two_t, [], 0, 1)

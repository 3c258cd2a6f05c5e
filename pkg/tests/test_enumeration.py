# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest

from balsys.contrib.catalog import make_system
from balsys.contrib.enumeration import (
    count_solutions,
    enumerate_solutions,
    first_solution,
    harvest_disjoint,
)
from balsys.contrib.errors import BudgetExceededError, NotFoundError
from balsys.contrib.pointset import PointSet, SearchBudget
from balsys.contrib.system import SystemMatrix
from balsys.contrib.witness import check_pairwise_disjoint


def is_shape(t):
    return t.distinct == t.k


class TestEnumerate:
    def test_count_three_ap(self, three_ap_F3, full_space, F3):
        assert count_solutions(three_ap_F3, full_space(F3, 1)) == 9
        assert count_solutions(three_ap_F3, full_space(F3, 2)) == 81

    def test_all_solutions_valid(self, F5, full_space):
        A = make_system("star", F5, k=1)
        S = PointSet(F5, 1, [(0,), (1,), (3,)])
        solutions = list(enumerate_solutions(A, S))
        assert all(t.is_solution for t in solutions)
        assert all(set(t.points) <= set(S) for t in solutions)
        assert len(solutions) == count_solutions(A, S)

    def test_order(self, three_ap_F3, full_space, F3):
        first = [t.points for t in enumerate_solutions(three_ap_F3, full_space(F3, 1))][:3]
        assert first == [((0,), (0,), (0,)), ((2,), (0,), (1,)), ((1,), (0,), (2,))]

    def test_full_rank_square_system(self, F3):
        A = SystemMatrix.from_signed(F3, [[1, 0], [0, 1]])
        assert count_solutions(A, PointSet(F3, 1, [(0,), (1,)])) == 1
        assert count_solutions(A, PointSet(F3, 1, [(1,)])) == 0

    def test_empty_set(self, three_ap_F3, F3):
        assert count_solutions(three_ap_F3, PointSet(F3, 1)) == 0

    def test_budget(self, three_ap_F3, full_space, F3):
        budget = SearchBudget(3)
        seen = []
        with pytest.raises(BudgetExceededError):
            for t in enumerate_solutions(three_ap_F3, full_space(F3, 1), budget):
                seen.append(t)
        assert len(seen) == 3
        assert budget.evaluations == 3


class TestFirstSolution:
    def test_first_shape(self, three_ap_F3, full_space, F3):
        t = first_solution(three_ap_F3, full_space(F3, 1), is_shape)
        assert t.points == ((2,), (0,), (1,))

    def test_none(self, three_ap_F3, F3):
        S = PointSet(F3, 1, [(0,), (1,)])
        assert first_solution(three_ap_F3, S, is_shape) is None

    @pytest.mark.parametrize("threads", [2, 4, 8])
    def test_threads_match_serial(self, threads, F5, full_space):
        A = make_system("star", F5)
        S = PointSet.random(F5, 2, 12, seed=4)
        serial_budget, parallel_budget = SearchBudget(), SearchBudget()
        serial = first_solution(A, S, is_shape, serial_budget)
        parallel = first_solution(A, S, is_shape, parallel_budget, threads=threads)
        assert serial == parallel
        assert serial_budget.evaluations == parallel_budget.evaluations

    def test_threads_budget(self, F5):
        A = make_system("star", F5)
        S = PointSet.full(F5, 1)
        with pytest.raises(BudgetExceededError):
            first_solution(A, S, lambda t: False, SearchBudget(50), threads=3)


class TestHarvest:
    def test_disjoint(self, three_ap_F3, full_space, F3):
        found = harvest_disjoint(three_ap_F3, full_space(F3, 2), 2, "shape")
        assert len(found) == 2
        check_pairwise_disjoint(found)
        assert all(is_shape(t) for t in found)

    def test_runs_dry(self, three_ap_F3, full_space, F3):
        with pytest.raises(NotFoundError):
            harvest_disjoint(three_ap_F3, full_space(F3, 1), 2, "shape")
        assert len(harvest_disjoint(three_ap_F3, full_space(F3, 1), 2, "shape", partial=True)) == 1

    def test_requirements(self, three_ap_F3, full_space, F3):
        S = full_space(F3, 1)
        assert harvest_disjoint(three_ap_F3, S, 1, "any")[0].distinct == 1
        assert harvest_disjoint(three_ap_F3, S, 1, ("distinct", 2))[0].distinct >= 2
        with pytest.raises(ValueError):
            harvest_disjoint(three_ap_F3, S, 1, "weird")

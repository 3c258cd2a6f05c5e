# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import numpy as np
import pytest

from balsys.contrib.catalog import make_system
from balsys.contrib.errors import BudgetExceededError
from balsys.contrib.pointset import (
    BELOW_THRESHOLD,
    FOUND,
    PointSet,
    SearchBudget,
    SearchReport,
    as_budget,
)
from balsys.contrib.witness import SolutionTuple
from balsys.core.errors import DimensionError, FieldError


class TestPointSet:
    def test_full(self, F3):
        S = PointSet.full(F3, 2)
        assert len(S) == 9
        assert S[0] == (0, 0)
        assert S[5] == (1, 2)
        assert S.array.shape == (9, 2)

    def test_random_is_reproducible(self, F5):
        a = PointSet.random(F5, 2, 10, seed=1)
        b = PointSet.random(F5, 2, 10, seed=1)
        assert a == b
        assert len(a) == 10
        assert list(a) == sorted(a)
        with pytest.raises(ValueError):
            PointSet.random(F5, 1, 6)

    def test_rejects_duplicates_and_bad_points(self, F3):
        with pytest.raises(ValueError):
            PointSet(F3, 1, [(0,), (0,)])
        with pytest.raises(DimensionError):
            PointSet(F3, 2, [(0,)])
        with pytest.raises(FieldError):
            PointSet(F3, 1, [(3,)])

    def test_membership(self, F3):
        S = PointSet(F3, 2, [(0, 1), (2, 2)])
        assert (2, 2) in S
        assert (1, 1) not in S
        assert S.position((2, 2)) == 1
        mask = S.member_mask(np.array([[[0, 1], [1, 1]], [[2, 2], [0, 0]]]))
        assert mask.tolist() == [[True, False], [True, False]]

    def test_empty_membership(self, F3):
        S = PointSet(F3, 2)
        assert len(S) == 0
        assert S.member_mask(np.zeros((4, 2), dtype=np.int64)).tolist() == [False] * 4

    def test_derived_sets(self, F3):
        S = PointSet.full(F3, 2)
        assert len(S.without([(0, 0), (1, 1)])) == 7
        assert list(S.slice(0, 2)) == [(2, 0), (2, 1), (2, 2)]
        assert len(S.subset(lambda p: p[0] == p[1])) == 3

    def test_as_dict(self, F3):
        assert PointSet(F3, 1, [(2,)])._as_dict() == {"q": 3, "n": 1, "points": [[2]]}


class TestSearchBudget:
    def test_unlimited(self):
        budget = as_budget(None)
        budget.charge(10 ** 6)
        assert budget.remaining is None

    def test_limit(self):
        budget = SearchBudget(5)
        budget.charge(3)
        assert budget.remaining == 2
        with pytest.raises(BudgetExceededError):
            budget.charge(3)
        assert budget.evaluations == 5

    def test_integer_budget(self):
        assert as_budget(7).max_evaluations == 7
        budget = SearchBudget(2)
        assert as_budget(budget) is budget

    def test_negative(self):
        with pytest.raises(ValueError):
            SearchBudget(-1)

    def test_rng_streams(self):
        budget = SearchBudget(seed=3)
        a = budget.rng(0).integers(0, 100, 5).tolist()
        assert a == SearchBudget(seed=3).rng(0).integers(0, 100, 5).tolist()
        assert a != budget.rng(1).integers(0, 100, 5).tolist()


class TestSearchReport:
    def test_outcome_checked(self):
        with pytest.raises(ValueError):
            SearchReport("shape", "maybe")

    def test_as_dict(self, F3):
        A = make_system("ap", F3)
        t = SolutionTuple(A, [(0,), (1,), (2,)])
        report = SearchReport("shape", FOUND, witness=t, evaluations=4)
        assert report.found
        data = report._as_dict()
        assert data["witness"] == [[0], [1], [2]]
        assert data["outcome"] == "found"
        assert data["evaluations"] == 4
        assert not SearchReport("shape", BELOW_THRESHOLD).found

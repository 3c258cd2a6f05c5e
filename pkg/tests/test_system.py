# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balsys.contrib.catalog import make_system
from balsys.contrib.errors import DegenerateSystemError
from balsys.contrib.system import (
    SystemMatrix,
    breaks_pair,
    breaks_pair_by_appending,
    classify_theorems,
    column_classes,
    decompose_irreducible,
    is_type_rc,
    pair_functional,
    preserves_classes,
    validate,
)
from balsys.core.errors import DimensionError
from balsys.core.field import fq_init
from balsys.testing import random_balanced_system


class TestSystemMatrix:
    def test_basic_properties(self, F5):
        A = SystemMatrix.from_signed(F5, [[1, 1, 0, 0, -2], [0, 0, 1, 1, -2]])
        assert (A.m, A.k, A.rank) == (2, 5, 2)
        assert A.balanced
        assert A.zero_columns == ()

    def test_needs_rows_and_columns(self, F5):
        with pytest.raises(DimensionError):
            SystemMatrix.from_signed(F5, np.zeros((0, 3), dtype=np.int64))

    def test_is_solution(self, F5):
        A = make_system("ap", F5)
        assert A.is_solution([(0, 1), (1, 2), (2, 3)])
        assert not A.is_solution([(0, 1), (1, 2), (2, 4)])

    def test_stripped(self, F3):
        A = SystemMatrix.from_signed(F3, [[1, 0, -1], [2, 0, -2]])
        stripped, columns = A.stripped()
        assert columns == (0, 2)
        assert stripped.m == 1
        assert stripped.A.tolist() == [[1, 2]]

    def test_stripped_all_zero(self, F3):
        A = SystemMatrix.from_signed(F3, [[0, 0]])
        with pytest.raises(DegenerateSystemError):
            A.stripped()

    def test_equality(self, F5):
        assert make_system("star", F5) == make_system("sstar", F5)
        assert make_system("star", F5) != make_system("fan", F5)


class TestColumnClasses:
    def test_star(self, F5):
        classes = make_system("star", F5).classes
        assert classes.as_lists() == [[0, 1], [2, 3], [4]]
        assert classes.count == 3
        assert len(classes.singletons) == 1
        assert classes.pairs() == [(0, 1), (2, 3)]
        assert not any(c.sums_to_zero for c in classes)

    def test_scalars(self, F5):
        A = make_system("w", F5)
        classes = A.classes
        assert classes.same_class(1, 3)
        assert classes.scalars(1, 3) == (4, 1)
        assert classes.class_of(1).sums_to_zero
        with pytest.raises(ValueError):
            classes.scalars(0, 2)
        with pytest.raises(ValueError):
            classes.scalars(1, 1)

    def test_zero_columns_are_degenerate(self, F3):
        classes = column_classes(SystemMatrix.from_signed(F3, [[1, 0, -1]]))
        assert classes.count == 1
        assert classes.as_lists() == [[0, 2], [1]]
        assert classes.class_of(1).degenerate
        assert not classes.same_class(1, 1)

    def test_three_ap_single_class(self, F5):
        classes = make_system("ap", F5).classes
        assert classes.as_lists() == [[0, 1, 2]]
        assert classes[0].scalars == (1, 3, 1)
        assert classes[0].sums_to_zero


class TestBreakingPairs:
    def test_breaks_pair(self, F5):
        A = make_system("star", F5)
        assert breaks_pair(A, [1, 0, 0, 0, 4], 0, 1)
        assert not breaks_pair(A, [1, 1, 0, 0, 3], 0, 1)
        assert pair_functional(A, 0, 1).tolist() == [1, 4, 0, 0, 0]

    def test_preserves_classes(self, F5):
        A = make_system("star", F5)
        assert preserves_classes(A, [1, 1, 1, 1, 1])
        assert not preserves_classes(A, [0, 0, 1, 0, 4])
        with pytest.raises(DimensionError):
            preserves_classes(A, [1, 1])

    @settings(max_examples=100, deadline=None)
    @given(
        st.sampled_from(["star", "fan", "w", "t", "lsk", "two_t", "s3"]),
        st.sampled_from([3, 5, 7]),
        st.lists(st.integers(0, 6), min_size=11, max_size=11),
    )
    def test_functional_and_appending_agree(self, name, p, row):
        A = make_system(name, p)
        b = [c % p for c in row[: A.k]]
        for j1, j2 in A.classes.pairs():
            assert breaks_pair(A, b, j1, j2) == breaks_pair_by_appending(A, b, j1, j2)
            f = pair_functional(A, j1, j2)
            assert bool(int(np.dot(f, b)) % p) == breaks_pair(A, b, j1, j2)


class TestTypeAndBlocks:
    def test_type_rc(self, F5):
        assert is_type_rc(make_system("star", F5))
        assert not is_type_rc(make_system("w", F5))
        assert not is_type_rc(make_system("ap", F5, k=4))

    def test_unbalanced_is_not_rc(self, F5):
        assert not is_type_rc(SystemMatrix.from_signed(F5, [[1, 1, 1]]))

    def test_decompose(self, F5):
        A = SystemMatrix.from_signed(F5, [[1, -2, 1, 0, 0, 0], [0, 0, 0, 1, -2, 1]])
        blocks = decompose_irreducible(A)
        assert [b.columns for b in blocks] == [(0, 1, 2), (3, 4, 5)]
        assert all(b.system.k == 3 and b.system.m == 1 for b in blocks)

    def test_decompose_irreducible_system(self, F5):
        assert len(decompose_irreducible(make_system("star", F5))) == 1

    def test_decompose_needs_nondegenerate(self, F5):
        with pytest.raises(DegenerateSystemError):
            decompose_irreducible(SystemMatrix.from_signed(F5, [[1, 0, -1]]))
        with pytest.raises(DegenerateSystemError):
            decompose_irreducible(SystemMatrix.from_signed(F5, [[1, -1], [2, -2]]))


class TestClassification:
    def test_star_flags(self, F5):
        flags = classify_theorems(make_system("star", F5))
        assert flags.situation
        assert flags.shape_clauses() == ["nonzero_sum"]
        assert flags.generic_clauses() == ["rank_gap"]
        assert flags.moderate and flags.temperate

    def test_three_ap_flags(self, F3):
        flags = classify_theorems(make_system("ap", F3))
        assert flags.shape_clauses() == ["nonzero_sum", "zero_sum"]
        assert flags.generic_clauses() == ["zero_sum"]

    def test_w_flags(self, F5):
        flags = classify_theorems(make_system("w", F5))
        assert not flags.situation
        assert not flags.moderate

    def test_validate_profile(self, F5):
        A = SystemMatrix.from_signed(F5, [[1, -2, 1, 0, 0, 0, 0], [0, 0, 0, 1, -2, 1, 0]])
        profile = validate(A)
        assert profile.balanced
        assert not profile.nondegenerate
        assert profile.zero_columns == (6,)
        assert [b.columns for b in profile.blocks] == [(0, 1, 2), (3, 4, 5)]
        assert not profile.irreducible
        assert profile.verdict == {"moderate": "yes", "temperate": "yes"}
        data = profile._as_dict()
        assert data["zero_columns"] == [6]
        assert len(data["blocks"]) == 2

    def test_all_zero_system_has_no_flags(self, F5, caplog):
        A = SystemMatrix.from_signed(F5, [[0, 0]])
        flags = classify_theorems(A)
        assert not flags.situation
        assert flags.shape_clauses() == []
        assert flags.generic_clauses() == []
        assert not (flags.base_rank_gap or flags.base_zero_sum)
        assert "Every column" in caplog.text

    def test_validate_all_zero_system(self, F5):
        profile = validate(SystemMatrix.from_signed(F5, [[0, 0]]))
        assert not profile.nondegenerate
        assert profile.zero_columns == (0, 1)
        assert profile.blocks == ()
        assert not profile.irreducible
        assert not profile.flags.moderate and not profile.flags.temperate
        assert profile.verdict == {"moderate": "unknown", "temperate": "unknown"}
        assert profile._as_dict()["blocks"] == []

    def test_profile_is_cached(self, F5):
        A = make_system("t", F5)
        assert A.profile is A.profile

    def test_random_balanced(self):
        ctx = fq_init(7)
        for seed in range(5):
            A = random_balanced_system(ctx, 2, 5, seed=seed)
            assert A.balanced
            assert A.rank == 2

# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balsys.core.algebra import (
    FqMatrix,
    affine_dim,
    augmented_matrix,
    fq_matmul,
    kernel_basis,
    rank,
    reduce_against,
    reduced_rows,
    rowspace_contains,
    rref,
)
from balsys.core.errors import DimensionError
from balsys.core.field import fq_init


class TestFqMatrix:
    def test_from_signed(self, F5):
        M = FqMatrix.from_signed(F5, [[1, 1, -2]])
        assert M.tolist() == [[1, 1, 3]]
        assert M.shape == (1, 3)

    def test_immutable(self, F3):
        M = FqMatrix(F3, [[1, 2]])
        with pytest.raises(ValueError):
            M.entries[0, 0] = 0

    def test_apply(self, F5):
        M = FqMatrix.from_signed(F5, [[1, -2, 1]])
        assert not np.any(M.apply([[0, 1], [1, 2], [2, 3]]))
        assert M.apply([[0], [0], [1]]).tolist() == [[1]]
        with pytest.raises(DimensionError):
            M.apply([[0], [1]])

    def test_submatrix_and_rows(self, F3):
        M = FqMatrix(F3, [[1, 2, 0], [0, 1, 1]])
        assert M.submatrix([2, 0]).tolist() == [[0, 1], [1, 0]]
        assert M.select_rows([1]).tolist() == [[0, 1, 1]]
        assert M.append_row([1, 1, 1]).rows == 3
        assert M.column(1) == (2, 1)

    def test_equality_and_hash(self, F3, F5):
        a = FqMatrix(F3, [[1, 2]])
        assert a == FqMatrix(F3, [[1, 2]])
        assert a != FqMatrix(F5, [[1, 2]])
        assert len({a, FqMatrix(F3, [[1, 2]])}) == 1


class TestEchelon:
    def test_rref(self, F5):
        M = FqMatrix(F5, [[2, 4, 1], [1, 2, 4]])
        result = rref(M)
        assert result.rank == 2
        assert result.pivots == (0, 2)
        assert result.rref.tolist() == [[1, 2, 0], [0, 0, 1]]

    def test_rank_deficient(self, F3):
        M = FqMatrix(F3, [[1, 1, 1], [2, 2, 2]])
        assert rank(M) == 1
        assert reduced_rows(M).tolist() == [[1, 1, 1]]

    def test_kernel(self, F3):
        M = FqMatrix(F3, [[1, 1, 1]])
        basis = kernel_basis(M)
        assert [v.coords for v in basis] == [(2, 1, 0), (2, 0, 1)]

    def test_rowspace(self, F5):
        M = FqMatrix.from_signed(F5, [[1, -2, 1, 0], [0, 1, -2, 1]])
        assert rowspace_contains(M, [1, -1 % 5, -1 % 5, 1])
        assert not rowspace_contains(M, [1, 0, 0, 4])
        assert not np.any(reduce_against(M, [2, 1, 2, 0]))
        with pytest.raises(DimensionError):
            rowspace_contains(M, [1, 2])

    def test_extension_field(self, F4):
        M = FqMatrix(F4, [[1, 2], [2, 3]])
        # second row is x times the first
        assert rank(M) == 1

    def test_matmul(self, F4):
        I = np.eye(2, dtype=np.int64)
        A = np.array([[2, 3], [1, 2]])
        assert fq_matmul(F4, A, I).tolist() == A.tolist()
        with pytest.raises(DimensionError):
            fq_matmul(F4, A, np.ones((3, 1), dtype=np.int64))


class TestAffine:
    def test_affine_dim(self, F3):
        assert affine_dim([(0, 0), (0, 0)], F3) == 0
        assert affine_dim([(0, 0), (1, 1), (2, 2)], F3) == 1
        assert affine_dim([(0, 0), (1, 0), (0, 1)], F3) == 2

    def test_augmented_matrix(self, F3):
        M = augmented_matrix([(0, 1), (2, 2)], F3)
        assert M.tolist() == [[1, 1], [0, 2], [1, 2]]

    def test_context_required(self):
        with pytest.raises(DimensionError):
            affine_dim([(0, 1)])


@st.composite
def matrices(draw):
    p, s = draw(st.sampled_from([(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)]))
    ctx = fq_init(p, s)
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=5))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, ctx.q - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return FqMatrix(ctx, entries)


class TestAlgebraProperties:
    @settings(max_examples=150, deadline=None)
    @given(matrices())
    def test_rank_nullity(self, M):
        basis = kernel_basis(M)
        assert rank(M) + len(basis) == M.cols
        for v in basis:
            assert not np.any(M.apply(np.array(v.coords).reshape(-1, 1)))

    @settings(max_examples=100, deadline=None)
    @given(matrices())
    def test_rref_idempotent(self, M):
        R = rref(M).rref
        assert rref(FqMatrix(M.ctx, R.entries)).rref == R

    @settings(max_examples=100, deadline=None)
    @given(matrices())
    def test_rows_in_rowspace(self, M):
        for i in range(M.rows):
            assert rowspace_contains(M, M.row(i))

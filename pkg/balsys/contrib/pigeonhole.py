# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Pairs of tuples whose common relations are exactly the rowspace of a matrix.

For a matrix ``A`` with ``k`` columns and a set ``S`` of at least
``q^(1 + (1 - 1/k) n)`` points there are ``x, y`` in ``S^k`` such that
``sum_j b_j x_j = sum_j b_j y_j`` holds exactly for the vectors ``b`` in the
rowspace of ``A``. Two tuples have the same image under ``A`` and differ
by linearly independent vectors in the free columns.
"""

import logging
import warnings
from itertools import product
from typing import NamedTuple

import numpy as np

from ..core.algebra import FqMatrix, fq_matmul, kernel_basis, rank, rref
from ..core.errors import InternalConsistencyError
from ..core.field import point_indices
from ..warnings import BelowThresholdWarning
from .constants import pigeonhole
from .errors import BelowThresholdError, NotFoundError
from .pointset import as_budget
from .system import SystemMatrix

logger = logging.getLogger(__name__)

BUCKET_LIMIT = 10 ** 5
VERIFY_LIMIT = 10 ** 6
STRATEGIES = ("auto", "bucket", "difference")


class PigeonholePair(NamedTuple):
    """Two tuples and how they were obtained."""

    x: tuple
    y: tuple
    strategy: str
    exhaustive: bool

    def _as_dict(self):
        return {
            "x": [list(p) for p in self.x],
            "y": [list(p) for p in self.y],
            "strategy": self.strategy,
            "verified_exhaustively": self.exhaustive,
        }


def _matrix(A):
    return A.A if isinstance(A, SystemMatrix) else A


def _independent(ctx, diffs):
    diffs = np.asarray(diffs, dtype=np.int64)
    if not len(diffs):
        return True
    return rank(FqMatrix(ctx, diffs.T)) == len(diffs)


def _bucket_pair(M, S, budget):
    ctx = M.ctx
    result = rref(M)
    R = result.rref.entries[: result.rank]
    free = [c for c in range(M.cols) if c not in result.pivots]
    k = M.cols
    budget.charge(len(S) ** k)
    idx = np.array(list(product(range(len(S)), repeat=k)), dtype=np.int64).reshape(-1, k)
    X = S.array[idx]
    if len(R):
        Z = fq_matmul(ctx, X.transpose(0, 2, 1), R.T)
        codes = point_indices(Z.reshape(len(X), -1), ctx.q)
    else:
        codes = np.zeros(len(X), dtype=np.int64)
    values, first, counts = np.unique(codes, return_index=True, return_counts=True)
    largest = np.flatnonzero(counts == counts.max())
    chosen = values[largest[np.argmin(first[largest])]]
    members = np.flatnonzero(codes == chosen)
    logger.debug(f"Largest bucket has {len(members)} of {len(X)} tuples.")
    y = X[members[0]]
    for t in members[1:]:
        if _independent(ctx, ctx.sub(X[t][free], y[free])):
            return y, X[t]
    return None


def _difference_pair(M, S, budget):
    ctx = M.ctx
    result = rref(M)
    R = result.rref.entries[: result.rank]
    pivots = result.pivots
    free = [c for c in range(M.cols) if c not in pivots]
    k, n = M.cols, S.n
    witnesses = {}
    for a in S:
        for b in S:
            d = tuple(int(v) for v in ctx.sub(np.array(b), np.array(a)))
            if d not in witnesses:
                witnesses[d] = (a, b)
    zero = tuple([0] * n)
    steps = [d for d in witnesses if d != zero]
    chosen = []

    def descend():
        level = len(chosen)
        if level == len(free):
            budget.charge()
            D = np.array(chosen, dtype=np.int64).reshape(len(free), n)
            forced = ctx.neg(fq_matmul(ctx, R[:, free], D)) if len(R) else np.zeros((0, n))
            forced = [tuple(int(v) for v in row) for row in forced]
            return forced if all(e in witnesses for e in forced) else None
        for d in steps:
            if not _independent(ctx, chosen + [d]):
                continue
            chosen.append(d)
            found = descend()
            if found is not None:
                return found
            chosen.pop()
        return None

    forced = descend()
    if forced is None:
        return None
    x = np.zeros((k, n), dtype=np.int64)
    y = np.zeros((k, n), dtype=np.int64)
    for f, d in zip(free, chosen):
        y[f], x[f] = witnesses[d]
    for pc, e in zip(pivots, forced):
        y[pc], x[pc] = witnesses[e]
    return y, x


def verify_pair(M, x, y, verify_limit=VERIFY_LIMIT):
    """Check that the common relations of ``x`` and ``y`` are exactly the rowspace of ``M``.

    The check is algebraic: the relations of the differences ``x_j - y_j``
    are compared with the rowspace. When ``q^k <= verify_limit`` every
    vector ``b`` is additionally tested directly.

    Returns
    -------
    bool
        Whether the exhaustive test was run.

    Raises
    ------
    InternalConsistencyError
        If a test fails.

    """
    M = _matrix(M)
    ctx = M.ctx
    k = M.cols
    diffs = ctx.sub(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)).reshape(k, -1)
    relations = kernel_basis(FqMatrix(ctx, diffs.T))
    reduced = rref(M)
    if len(relations) != reduced.rank or not all(
        not np.any(_residual(M, np.array(v.coords)[None, :])) for v in relations
    ):
        raise InternalConsistencyError("The pair has relations outside the rowspace.")
    if ctx.q ** k > verify_limit:
        return False
    B = np.array(list(product(range(ctx.q), repeat=k)), dtype=np.int64)
    vanishes = ~np.any(fq_matmul(ctx, B, diffs), axis=1)
    in_rowspace = ~np.any(_residual(M, B), axis=1)
    if not np.array_equal(vanishes, in_rowspace):
        raise InternalConsistencyError("Exhaustive check of the pair failed.")
    return True


def _residual(M, B):
    ctx = M.ctx
    result = rref(M)
    R = result.rref.entries[: result.rank]
    if not len(R):
        return B
    return ctx.sub(B, fq_matmul(ctx, B[:, list(result.pivots)], R))


def pigeonhole_pair(
    A,
    S,
    override=False,
    strategy="auto",
    budget=None,
    verify_limit=VERIFY_LIMIT,
    bucket_limit=BUCKET_LIMIT,
):
    """Return ``x, y`` in ``S^k`` whose common relations are exactly the rowspace of ``A``.

    Parameters
    ----------
    A : :class:`~balsys.core.algebra.FqMatrix` or :class:`~balsys.contrib.system.SystemMatrix`
        The matrix; it need not be balanced.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    override : bool
        Search even if ``|S|`` is below ``ceil(q^(1 + (1 - 1/k) n))``
        (Default value = False).
    strategy : str
        ``"bucket"`` groups all of ``S^k`` by image and scans the largest
        group; ``"difference"`` searches the differences ``x_j - y_j`` depth
        first; ``"auto"`` buckets when ``|S|^k <= bucket_limit``.
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Evaluation limit.
    verify_limit : int
        Largest ``q^k`` for the exhaustive re-check (Default value = 10**6).

    Returns
    -------
    :class:`PigeonholePair`
        The pair.

    Raises
    ------
    BelowThresholdError
        If ``S`` is too small and ``override`` is not set.
    NotFoundError
        If a search below the threshold finds nothing.

    """
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy '{strategy}', expected one of {STRATEGIES}.")
    M = _matrix(A)
    ctx = M.ctx
    k, n = M.cols, S.n
    budget = as_budget(budget)
    required = pigeonhole(ctx.q, k, n)
    if len(S) < required:
        if not override:
            raise BelowThresholdError("pigeonhole", required, len(S))
        warnings.warn(
            f"Pigeonhole search on {len(S)} points, below the threshold {required}.",
            BelowThresholdWarning,
        )
    if not len(S):
        raise NotFoundError("The point set is empty.")
    if rank(M) == k:
        x = y = np.tile(S.array[0], (k, 1))
        used = "trivial"
    else:
        if strategy == "auto":
            strategy = "bucket" if len(S) ** k <= bucket_limit else "difference"
        search = _bucket_pair if strategy == "bucket" else _difference_pair
        found = search(M, S, budget)
        if found is None:
            raise NotFoundError(f"No pigeonhole pair in {len(S)} points ({strategy}).")
        x, y = found
        used = strategy
    exhaustive = verify_pair(M, x, y, verify_limit)
    to_points = lambda arr: tuple(tuple(int(c) for c in p) for p in arr)  # noqa: E731
    logger.debug(f"Pigeonhole pair via {used}, exhaustive check: {exhaustive}.")
    return PigeonholePair(to_points(x), to_points(y), used, exhaustive)


__all__ = ["BUCKET_LIMIT", "PigeonholePair", "VERIFY_LIMIT", "pigeonhole_pair", "verify_pair"]

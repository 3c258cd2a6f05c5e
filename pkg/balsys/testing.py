# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Functions for generating random instances for testing purposes."""

import numpy as np

from .contrib.pointset import PointSet
from .contrib.system import SystemMatrix
from .core.algebra import FqMatrix, rank


def random_balanced_system(ctx, m, k, seed=0, full_rank=True, max_tries=100):
    """Return a random ``m x k`` system over F_q whose rows sum to zero.

    Parameters
    ----------
    ctx : :class:`~balsys.core.field.FieldCtx`
        The field.
    m : int
        Number of equations, ``1 <= m <= k - 1`` when ``full_rank``.
    k : int
        Number of variables.
    seed : int
        Seed of the numpy Generator (Default value = 0).
    full_rank : bool
        Redraw until the rows are independent (Default value = True).

    Raises
    ------
    ValueError
        If no system of full rank was drawn in ``max_tries`` attempts.

    """
    if full_rank and m > k - 1:
        raise ValueError(f"A balanced system in {k} variables has rank at most {k - 1}.")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        head = rng.integers(0, ctx.q, size=(m, k - 1))
        last = ctx.neg(ctx.combine(np.ones(k - 1, dtype=np.int64), head.T))
        A = FqMatrix(ctx, np.column_stack([head, np.asarray(last, dtype=np.int64)]))
        if not full_rank or rank(A) == m:
            return SystemMatrix(A)
    raise ValueError(f"No {m} x {k} system of full rank in {max_tries} draws.")


def random_points(ctx, n, count, seed=0):
    """Return ``count`` random (not necessarily distinct) points of F_q^n as tuples."""
    rng = np.random.default_rng(seed)
    return [tuple(int(c) for c in row) for row in rng.integers(0, ctx.q, size=(count, n))]


def random_pointset(ctx, n, size, seed=0):
    """Return a random subset of F_q^n with ``size`` points."""
    return PointSet.random(ctx, n, size, seed=seed)


__all__ = ["random_balanced_system", "random_points", "random_pointset"]

# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Exact extremal sizes of shape-free sets in small spaces."""

import logging
from typing import NamedTuple

from ..core.errors import InternalConsistencyError
from ..core.field import point_index, vec_from_index
from .enumeration import enumerate_solutions, first_solution
from .errors import BudgetExceededError
from .pointset import PointSet, as_budget
from .system import as_system
from .utility import log_more, progress

logger = logging.getLogger(__name__)

MAX_POINTS = 729


class ExtremalResult(NamedTuple):
    """Largest shape-free set found by a search.

    ``exact`` is False if the budget ran out, in which case ``size`` is only
    a lower bound.
    """

    size: int
    witness: PointSet
    exact: bool
    evaluations: int

    def _as_dict(self):
        return {
            "size": self.size,
            "exact": self.exact,
            "evaluations": self.evaluations,
            "witness": self.witness._as_dict(),
        }


def shape_hypergraph(A, n, budget=None, show_progress=False):
    """Return the shapes of ``A`` in F_q^n as sets of point indices, grouped by point.

    Returns
    -------
    list[list[frozenset]]
        Entry ``v`` lists the shapes (as index sets) containing point ``v``.

    """
    A = as_system(A)
    q = A.ctx.q
    full = PointSet.full(A.ctx, n)
    incident = [[] for _ in range(len(full))]
    seen = set()
    for t in progress(enumerate_solutions(A, full, budget), desc="shapes", enabled=show_progress):
        if t.distinct != t.k:
            continue
        edge = frozenset(point_index(p, q) for p in t.points)
        if edge in seen:
            continue
        seen.add(edge)
        for v in edge:
            incident[v].append(edge)
    logger.debug(f"{len(seen)} distinct shape sets in F_{A.ctx.label}^{n}.")
    return incident


def max_shape_free(A, n, budget=None, show_progress=False):
    """Return the largest subset of F_q^n that contains no shape of ``A``.

    The search is a depth-first branch and bound over the points in index
    order. Balanced systems are invariant under translation, so for them
    the origin is always taken.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system.
    n : int
        Dimension.
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Limit on search nodes; when it runs out the best set so far is
        returned with ``exact=False``.

    Returns
    -------
    :class:`ExtremalResult`
        The size and a witness set, re-checked to be shape-free.

    Raises
    ------
    ValueError
        If F_q^n has more than :data:`MAX_POINTS` points.

    """
    A = as_system(A)
    ctx = A.ctx
    N = ctx.q ** n
    if N > MAX_POINTS:
        raise ValueError(f"F_{ctx.label}^{n} has {N} points, more than {MAX_POINTS}.")
    budget = as_budget(budget)
    incident = shape_hypergraph(A, n, show_progress=show_progress)
    forced = {0} if A.balanced else set()
    best = [0, []]
    chosen = []
    members = set()

    def allowed(v):
        return all(not (edge - {v}) <= members for edge in incident[v])

    def descend(v):
        budget.charge()
        if len(chosen) + (N - v) <= best[0]:
            return
        if v == N:
            best[0], best[1] = len(chosen), list(chosen)
            return
        if allowed(v):
            chosen.append(v)
            members.add(v)
            descend(v + 1)
            chosen.pop()
            members.discard(v)
        if v not in forced:
            descend(v + 1)

    exact = True
    try:
        descend(0)
    except BudgetExceededError:
        exact = False
        log_more(logger, f"Budget exhausted; best shape-free set so far has {best[0]} points.")
    witness = PointSet(ctx, n, (vec_from_index(ctx, n, v).coords for v in best[1]))
    if len(witness) and first_solution(A, witness, lambda t: t.distinct == t.k) is not None:
        raise InternalConsistencyError(f"Extremal witness {witness!r} contains a shape.")
    log_more(logger, f"Largest shape-free set in F_{ctx.label}^{n}: {best[0]} (exact={exact}).")
    return ExtremalResult(best[0], witness, exact, budget.evaluations)


__all__ = ["ExtremalResult", "MAX_POINTS", "max_shape_free", "shape_hypergraph"]

# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Exhaustive enumeration of the solutions of a system inside a point set.

The free columns of the reduced echelon form are assigned points of ``S``
(depth first, in the order of ``S``); the pivot variables are then forced and
tested for membership. The innermost free variable is handled in one
vectorised batch over all of ``S``. Every full assignment of the free
variables counts as one evaluation, so the cost is ``|S|^(k - rank)``.
"""

import logging
from multiprocessing.pool import ThreadPool

import numpy as np

from ..core.algebra import rref
from .errors import BudgetExceededError, NotFoundError
from .pointset import as_budget
from .system import as_system
from .witness import SolutionTuple

logger = logging.getLogger(__name__)


class _Walk:
    """Depth-first walk over the free-variable assignments of a system.

    Iterating yields solution arrays (``k x n``). ``leaves`` is the number of
    assignments evaluated up to and including the last yielded solution, or
    up to the end of the walk once it is finished.
    """

    def __init__(self, system, S, limit=None, first=None, budget=None):
        self.system = system
        self.S = S
        self.limit = limit
        self.first = first
        self.budget = budget
        self.leaves = 0
        self.exceeded = False
        result = rref(system.A)
        self._R = result.rref.entries[: result.rank]
        self._pivots = result.pivots
        self._free = [c for c in range(system.k) if c not in result.pivots]

    @property
    def free(self):
        return self._free

    def _allowance(self, count):
        if self.limit is None:
            return count
        return max(0, min(count, self.limit - self.leaves))

    def __iter__(self):
        ctx = self.system.ctx
        n = self.S.n
        partial = np.zeros((len(self._pivots), n), dtype=np.int64)
        if not self._free:
            if self._allowance(1) < 1:
                self.exceeded = True
                return
            self.leaves = 1
            if len(self.S) and self.S.member_mask(np.zeros((1, n), dtype=np.int64))[0]:
                yield np.zeros((self.system.k, n), dtype=np.int64)
            return
        if not len(self.S):
            return
        yield from self._descend(0, partial, {})

    def _descend(self, level, partial, assignment):
        ctx = self.system.ctx
        f = self._free[level]
        coeffs = self._R[:, f]
        if level == len(self._free) - 1:
            yield from self._batch(partial, assignment, f, coeffs)
            return
        values = [self.first] if level == 0 and self.first is not None else range(len(self.S))
        for a in values:
            x = self.S.array[a]
            assignment[f] = a
            nxt = ctx.add(partial, ctx.mul(coeffs[:, None], x[None, :]))
            yield from self._descend(level + 1, nxt, assignment)
            if self.exceeded:
                return

    def _batch(self, partial, assignment, f, coeffs):
        ctx = self.system.ctx
        arr = self.S.array
        N = len(arr)
        if self.budget is not None:
            self.budget.check_time()
        take = self._allowance(N)
        before = self.leaves
        forced = ctx.neg(ctx.add(partial[:, None, :], ctx.mul(coeffs[:, None, None], arr[None])))
        mask = np.all(self.S.member_mask(forced), axis=0) if len(self._pivots) else np.ones(N, bool)
        for b in np.flatnonzero(mask[:take]):
            points = np.empty((self.system.k, self.S.n), dtype=np.int64)
            for g, a in assignment.items():
                points[g] = arr[a]
            points[f] = arr[b]
            for r, pc in enumerate(self._pivots):
                points[pc] = forced[r, b]
            self.leaves = before + int(b) + 1
            yield points
        self.leaves = before + take
        if take < N:
            self.exceeded = True


def enumerate_solutions(A, S, budget=None):
    """Yield every solution of ``A`` with all entries in ``S``.

    Solutions are produced in lexicographic order of the positions in ``S``
    of their free variables.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        Any system, balanced or not.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Evaluation limit; charged with the evaluations actually performed.

    Yields
    ------
    :class:`~balsys.contrib.witness.SolutionTuple`
        The solutions.

    Raises
    ------
    BudgetExceededError
        After the last solution within the budget has been yielded.

    """
    A = as_system(A)
    budget = as_budget(budget)
    walk = _Walk(A, S, limit=budget.remaining, budget=budget)
    try:
        for points in walk:
            yield SolutionTuple(A, points.tolist())
    finally:
        budget.evaluations += walk.leaves
    if walk.exceeded:
        raise BudgetExceededError(budget.evaluations)


def count_solutions(A, S, budget=None):
    """Return the number of solutions of ``A`` in ``S``."""
    return sum(1 for _ in enumerate_solutions(A, S, budget))


def _chunk_search(args):
    system, S, first, limit, predicate = args
    walk = _Walk(system, S, limit=limit, first=first)
    for points in walk:
        t = SolutionTuple(system, points.tolist())
        if predicate is None or predicate(t):
            return t, walk.leaves, False
    return None, walk.leaves, walk.exceeded


def first_solution(A, S, predicate=None, budget=None, threads=1):
    """Return the first solution in enumeration order satisfying ``predicate``.

    With ``threads > 1`` the walk is split by the value of the first free
    variable and the chunks run on a thread pool; the chunk results are
    reduced in order, so the returned solution and the evaluation count are
    those of the serial walk.

    Returns
    -------
    :class:`~balsys.contrib.witness.SolutionTuple`
        The solution, or None if there is none.

    Raises
    ------
    BudgetExceededError
        If the budget runs out first.

    """
    A = as_system(A)
    budget = as_budget(budget)
    walk = _Walk(A, S)
    if threads <= 1 or len(walk.free) < 2 or not len(S):
        solutions = enumerate_solutions(A, S, budget)
        try:
            for t in solutions:
                if predicate is None or predicate(t):
                    return t
        finally:
            solutions.close()
        return None
    limit = budget.remaining
    spent = 0
    tasks = ((A, S, a, limit, predicate) for a in range(len(S)))
    with ThreadPool(threads) as pool:
        for found, leaves, exceeded in pool.imap(_chunk_search, tasks):
            if found is not None and (limit is None or spent + leaves <= limit):
                budget.evaluations += spent + leaves
                return found
            spent += leaves
            if found is not None or exceeded or (limit is not None and spent > limit):
                budget.evaluations += limit
                raise BudgetExceededError(budget.evaluations)
            budget.check_time()
    budget.evaluations += spent
    return None


REQUIREMENTS = ("any", "nontrivial", "shape", "distinct")


def _requirement(requirement):
    if callable(requirement):
        return requirement
    if requirement == "any":
        return None
    if requirement == "nontrivial":
        return lambda t: t.distinct > 1
    if requirement == "shape":
        return lambda t: t.distinct == t.k
    if isinstance(requirement, tuple) and requirement[0] == "distinct":
        lam = requirement[1]
        return lambda t: t.distinct >= lam
    raise ValueError(f"Unknown requirement {requirement!r}, expected one of {REQUIREMENTS}.")


def harvest_disjoint(A, S, count, requirement="any", budget=None, threads=1, partial=False):
    """Greedily collect pairwise disjoint solutions.

    Each round takes the first solution in the remaining points meeting the
    requirement and removes its entries from the pool.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    count : int
        Number of solutions wanted.
    requirement : str, tuple or callable
        ``"any"``, ``"nontrivial"``, ``"shape"``, ``("distinct", lam)`` for
        at least ``lam`` distinct entries, or a predicate on
        :class:`~balsys.contrib.witness.SolutionTuple` (Default value = "any").
    partial : bool
        Return fewer solutions instead of raising (Default value = False).

    Raises
    ------
    NotFoundError
        If the pool runs dry before ``count`` solutions were found.

    """
    predicate = _requirement(requirement)
    budget = as_budget(budget)
    found = []
    pool = S
    while len(found) < count:
        t = first_solution(A, pool, predicate, budget, threads)
        if t is None:
            if partial:
                break
            raise NotFoundError(f"Harvested only {len(found)} of {count} disjoint solutions.")
        found.append(t)
        pool = pool.without(t.points)
    logger.debug(f"Harvested {len(found)} disjoint solutions ({requirement}).")
    return found


__all__ = [
    "REQUIREMENTS",
    "count_solutions",
    "enumerate_solutions",
    "first_solution",
    "harvest_disjoint",
]

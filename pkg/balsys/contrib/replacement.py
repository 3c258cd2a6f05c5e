# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Recombination of pairwise disjoint solutions.

Let columns ``j1`` and ``j2`` of a system be ``alpha v`` and ``beta v``. If
``x^(i)``, ``x^(i')``, ``x^(i'')`` are solutions with

    alpha x^(i)_j1 + beta x^(i)_j2 = alpha x^(i')_j1 + beta x^(i'')_j2,

the two entries of ``x^(i)`` at ``j1`` and ``j2`` contribute the same to every
equation as the entry of ``x^(i')`` at ``j1`` together with the entry of
``x^(i'')`` at ``j2``, so swapping them in yields another solution. Such index
triples are found by exact counting with a hash join.
"""

import logging
from typing import NamedTuple

import numpy as np

from ..core.errors import InternalConsistencyError
from ..core.field import point_indices
from .errors import DegenerateListError, NotFoundError
from .system import as_system, pair_functional
from .witness import SolutionTuple, annihilator_contained, check_pairwise_disjoint

logger = logging.getLogger(__name__)


class Collision(NamedTuple):
    """An anchor ``i`` and the pairs ``(i', i'')`` that collide with it."""

    anchor: int
    pairs: list


class Recombination(NamedTuple):
    """A recombined solution and where its entries came from."""

    anchor: int
    donors: tuple
    solution: SolutionTuple


def _as_array(points):
    if len(points) == 0:
        return np.empty((0, 0), dtype=np.int64)
    return np.asarray([tuple(p) for p in points], dtype=np.int64).reshape(len(points), -1)


def collision_pairs(ctx, xs, ys, alpha, beta):
    """Yield ``(i, pairs)`` for every anchor ``i`` that has at least one colliding pair.

    A pair ``(i', i'')`` collides with ``i`` if ``i' != i``, ``i'' != i`` and
    ``alpha xs[i'] + beta ys[i''] = alpha xs[i] + beta ys[i]``; ``i' = i''``
    is allowed. Anchors are visited in increasing order and pairs are sorted.

    Raises
    ------
    DegenerateListError
        If ``xs`` or ``ys`` contains a repeated vector.
    ValueError
        If ``alpha`` or ``beta`` is zero.

    """
    if not alpha or not beta:
        raise ValueError("Both scalars of a collision must be nonzero.")
    X, Y = _as_array(xs), _as_array(ys)
    L = len(X)
    if len(Y) != L:
        raise DegenerateListError(f"Lists of different lengths {len(X)} and {len(Y)}.")
    if L == 0:
        return
    for name, arr in (("xs", X), ("ys", Y)):
        if len(np.unique(point_indices(arr, ctx.q))) != L:
            raise DegenerateListError(f"The vectors in {name} are not pairwise distinct.")
    ax = ctx.mul(alpha, X)
    by = ctx.mul(beta, Y)
    z = ctx.add(ax, by)
    codes = point_indices(ax, ctx.q)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    for i in range(L):
        targets = point_indices(ctx.sub(z[i][None, :], by), ctx.q)
        pos = np.clip(np.searchsorted(sorted_codes, targets), 0, L - 1)
        hit = sorted_codes[pos] == targets
        first = order[pos]
        second = np.arange(L)
        keep = hit & (first != i) & (second != i)
        if np.any(keep):
            pairs = sorted(zip(first[keep].tolist(), second[keep].tolist()))
            yield i, pairs


def find_collision(ctx, xs, ys, alpha, beta, t=1):
    """Return the smallest anchor with at least ``t`` colliding pairs.

    Parameters
    ----------
    ctx : :class:`~balsys.core.field.FieldCtx`
        The field.
    xs, ys : sequence
        Two lists of ``L`` pairwise distinct vectors each.
    alpha, beta : int
        Nonzero scalars.
    t : int
        Number of pairs needed (Default value = 1).

    Returns
    -------
    :class:`Collision`
        The anchor and all of its colliding pairs, sorted.

    Raises
    ------
    NotFoundError
        If no anchor has ``t`` pairs. This is a legal outcome for short lists.

    """
    if t < 1:
        raise ValueError(f"Need t >= 1, got {t}.")
    for i, pairs in collision_pairs(ctx, xs, ys, alpha, beta):
        if len(pairs) >= t:
            return Collision(i, pairs)
    raise NotFoundError(f"No anchor among {len(xs)} has {t} colliding pairs.")


def _prepare(A, solutions, j1, j2):
    A = as_system(A)
    solutions = [s if isinstance(s, SolutionTuple) else SolutionTuple(A, s) for s in solutions]
    check_pairwise_disjoint(solutions)
    for i, s in enumerate(solutions):
        if not s.is_solution:
            raise DegenerateListError(f"Entry {i} of the list is not a solution.")
    alpha, beta = A.classes.scalars(j1, j2)
    return A, solutions, alpha, beta


def _recombine(A, solutions, anchor, pair, j1, j2, alpha, beta):
    i1, i2 = pair
    x = solutions[anchor]
    y = x.with_entries({j1: solutions[i1][j1], j2: solutions[i2][j2]})
    ctx = A.ctx
    before = ctx.add(ctx.mul(alpha, np.array(x[j1])), ctx.mul(beta, np.array(x[j2])))
    after = ctx.add(ctx.mul(alpha, np.array(y[j1])), ctx.mul(beta, np.array(y[j2])))
    if np.any(before != after) or not y.is_solution:
        raise InternalConsistencyError(
            f"Recombining {anchor} with {pair} on columns ({j1}, {j2}) broke a solution."
        )
    return Recombination(anchor, pair, y)


def recombinations(A, solutions, j1, j2):
    """Yield every recombination of a list of disjoint solutions on the pair ``(j1, j2)``.

    Recombinations are ordered by anchor, then by donor pair.

    Raises
    ------
    DegenerateListError
        If the solutions are not pairwise disjoint solutions.
    ValueError
        If ``j1`` and ``j2`` are not distinct equivalent columns.

    """
    A, solutions, alpha, beta = _prepare(A, solutions, j1, j2)
    xs = [s[j1] for s in solutions]
    ys = [s[j2] for s in solutions]
    for i, pairs in collision_pairs(A.ctx, xs, ys, alpha, beta):
        for pair in pairs:
            yield _recombine(A, solutions, i, pair, j1, j2, alpha, beta)


def single_replacement(A, solutions, j1, j2):
    """Return the first :class:`Recombination` on ``(j1, j2)``.

    Raises
    ------
    NotFoundError
        If the list admits no recombination.

    """
    for rec in recombinations(A, solutions, j1, j2):
        return rec
    raise NotFoundError(f"No recombination among {len(solutions)} solutions.")


def replace_single(A, solutions, j1, j2):
    """Return a solution built from three solutions of a disjoint list.

    The result agrees with solution ``i`` except at ``j1`` (taken from
    solution ``i'``) and ``j2`` (taken from solution ``i''``), with ``i``
    distinct from ``i'`` and ``i''``.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system.
    solutions : list
        Pairwise disjoint solutions.
    j1, j2 : int
        Distinct columns of one equivalence class.

    Returns
    -------
    :class:`~balsys.contrib.witness.SolutionTuple`
        The recombined solution.

    """
    return single_replacement(A, solutions, j1, j2).solution


def replace_multiple(A, solutions, j1, j2, t):
    """Return an anchor ``i`` and ``t`` distinct recombinations around it.

    Returns
    -------
    tuple
        ``(i, [SolutionTuple, ...])``.

    Raises
    ------
    NotFoundError
        If no anchor admits ``t`` recombinations.

    """
    A, solutions, alpha, beta = _prepare(A, solutions, j1, j2)
    xs = [s[j1] for s in solutions]
    ys = [s[j2] for s in solutions]
    i, pairs = find_collision(A.ctx, xs, ys, alpha, beta, t)
    found = [_recombine(A, solutions, i, p, j1, j2, alpha, beta).solution for p in pairs[:t]]
    return i, found


def keeps_pair(A, y, j1, j2):
    """Return True iff no balanced relation of the solution ``y`` breaks the pair ``(j1, j2)``."""
    f = pair_functional(A, j1, j2)
    return not any(A.ctx.combine(b, f) for b in y.ann_bal)


def eliminate_breaking_pair(A, solutions, j1, j2, accept=None):
    """Return a recombination none of whose balanced relations breaks ``(j1, j2)``.

    Candidates are scanned in the order of :func:`recombinations`. The
    relations of the result are relations of its anchor solution, so pairs
    that no relation of the anchor breaks stay unbroken.

    Parameters
    ----------
    accept : callable
        Optional further condition on the candidate solution.

    Returns
    -------
    :class:`Recombination`
        The accepted recombination.

    Raises
    ------
    NotFoundError
        If the list is empty or no candidate passes.

    """
    if not solutions:
        raise NotFoundError("Cannot eliminate a pair from an empty list.")
    A = as_system(A)
    checked = 0
    for rec in recombinations(A, solutions, j1, j2):
        checked += 1
        y = rec.solution
        if not keeps_pair(A, y, j1, j2) or (accept is not None and not accept(y)):
            continue
        if not annihilator_contained(y, solutions[rec.anchor]):
            raise InternalConsistencyError(
                f"Relations of {y!r} are not relations of anchor {rec.anchor}."
            )
        logger.debug(f"Pair ({j1}, {j2}) eliminated after {checked} candidates.")
        return rec
    raise NotFoundError(
        f"None of {checked} recombinations of {len(solutions)} solutions keeps ({j1}, {j2})."
    )


__all__ = [
    "Collision",
    "Recombination",
    "collision_pairs",
    "eliminate_breaking_pair",
    "find_collision",
    "keeps_pair",
    "recombinations",
    "replace_multiple",
    "replace_single",
    "single_replacement",
]

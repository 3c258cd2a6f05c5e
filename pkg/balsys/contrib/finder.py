# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Constructive search for non-trivial solutions, shapes and generic solutions.

All constructions work on lists of pairwise disjoint solutions. One round
of an induction turns the list of one level into the list of the next: a
solution that already has the property of the next level moves up
unchanged, the others are recombined (see
:mod:`balsys.contrib.replacement`), each recombination consuming its anchor
and donor solutions.

Every construction checks the size of the point set against the threshold
that guarantees success. Below the threshold it raises
:class:`~balsys.contrib.errors.BelowThresholdError` unless ``override`` is
set, in which case it warns with
:class:`~balsys.warnings.BelowThresholdWarning` and tries anyway.
:func:`run_finder` wraps the constructions into a
:class:`~balsys.contrib.pointset.SearchReport` and falls back to exhaustive
enumeration when a construction fails.
"""

import logging
import warnings

import numpy as np

from ..core.algebra import FqMatrix, affine_dim, rank
from ..core.errors import DimensionError, InternalConsistencyError
from ..warnings import BelowThresholdWarning
from .catalog import make_system
from .constants import thresholds
from .enumeration import first_solution, harvest_disjoint
from .errors import BelowThresholdError, BudgetExceededError, NotApplicableError, NotFoundError
from .pigeonhole import pigeonhole_pair
from .pointset import (
    BELOW_THRESHOLD,
    BUDGET_EXCEEDED,
    EXHAUSTED,
    FOUND,
    SearchReport,
    as_budget,
)
from .replacement import eliminate_breaking_pair, keeps_pair, recombinations, single_replacement
from .system import SystemMatrix, as_system, classify_theorems, decompose_irreducible, is_type_rc
from .utility import log_more
from .witness import SolutionTuple, has_class_property, is_generic

logger = logging.getLogger(__name__)

FINDER_KINDS = ("nontrivial", "shape", "generic", "highrank", "wshape")
RECOMBINE_MODES = ("shape", "generic")


def _require_same_field(A, S):
    if A.ctx != S.ctx:
        raise DimensionError(f"System over F_{A.ctx.label} but point set over F_{S.ctx.label}.")


def _block_kind(system, purpose):
    flags = classify_theorems(system)
    if purpose == "shape":
        if not flags.moderate:
            raise NotApplicableError(
                f"No shape construction applies to {system!r}: it must be of type (RC) "
                "without a zero-sum class of size 2, or have only zero-sum classes and k >= 3."
            )
        return "shape" if flags.shape_nonzero_sum else "shape_zero_sum"
    if not flags.temperate:
        raise NotApplicableError(
            f"No generic construction applies to {system!r}: it must be of type (RC) with "
            "only zero-sum classes, or with none and one class more than its rank."
        )
    return "temperate"


def _nondegenerate_blocks(A):
    S, columns = A.stripped()
    return S, columns, decompose_irreducible(S)


def required_size(kind, A, n, mode="flat"):
    """Return the threshold that guarantees success of a construction.

    For systems with several irreducible blocks or with zero columns the
    block thresholds are combined into a size that leaves every block
    enough points: for shapes the largest block threshold plus ``k``, for
    generic solutions the largest block threshold times the shrinkage of
    the point set along the slices used to separate the blocks. These
    combined values are sufficient, not optimal.

    Parameters
    ----------
    kind : str
        One of ``shape``, ``generic``, ``highrank`` and ``wshape``.
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system.
    n : int
        Dimension of the ambient space.
    mode : str
        Gamma mode (Default value = "flat").

    Returns
    -------
    tuple
        ``(threshold_kind, required)``.

    Raises
    ------
    NotApplicableError
        If no construction applies.

    """
    A = as_system(A)
    if kind == "wshape":
        return "w_shape", thresholds(A, n, "w_shape", mode=mode)
    if kind == "highrank":
        S, _, blocks = _nondegenerate_blocks(A)
        if A.zero_columns or len(blocks) > 1 or not is_type_rc(S):
            raise NotApplicableError("High-rank solutions need an irreducible system of type (RC).")
        flags = classify_theorems(S)
        if flags.base_zero_sum:
            return "temperate", thresholds(S, n, "temperate", mode=mode)
        return "rank", thresholds(S, n, "rank", mode=mode)
    if kind not in ("shape", "generic"):
        raise ValueError(f"No threshold for finder kind '{kind}'.")
    S, _, blocks = _nondegenerate_blocks(A)
    values = []
    for block in blocks:
        threshold_kind = _block_kind(block.system, kind)
        values.append((thresholds(block.system, n, threshold_kind, mode=mode), threshold_kind))
    required, threshold_kind = max(values)
    if len(blocks) == 1 and not A.zero_columns:
        return threshold_kind, required
    if kind == "shape":
        return threshold_kind, required + A.k
    q = A.ctx.q
    for block in blocks[:-1]:
        required *= q * max(n, 1) * q ** (block.system.k - 1)
    return threshold_kind, required


def _check_threshold(kind, A, S, override, mode):
    threshold_kind, required = required_size(kind, A, S.n, mode)
    if len(S) < required:
        if not override:
            raise BelowThresholdError(threshold_kind, required, len(S))
        warnings.warn(
            f"Searching for a {kind} solution in {len(S)} points, below the "
            f"'{threshold_kind}' threshold {required}.",
            BelowThresholdWarning,
        )
    return threshold_kind, required


def _consume(pool, rec):
    used = {rec.anchor, *rec.donors}
    return [s for i, s in enumerate(pool) if i not in used]


def _class_pair_solutions(A, S, budget, keep):
    """Build disjoint solutions from pigeonhole pairs on the class representatives.

    Every class of ``A`` must sum to zero. The representative of a class
    takes an entry of ``x`` and the other members the matching entry of
    ``y``.
    """
    classes = A.classes.proper
    reps = [c.members[0] for c in classes]
    reduced = A.A.submatrix(reps)
    found = []
    pool = S
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BelowThresholdWarning)
        while len(pool):
            try:
                pair = pigeonhole_pair(reduced, pool, override=True, budget=budget)
            except (NotFoundError, BelowThresholdError):
                break
            points = [None] * A.k
            for c, x, y in zip(classes, pair.x, pair.y):
                for j in c.members:
                    points[j] = x if j == c.members[0] else y
            t = SolutionTuple(A, points)
            if not t.is_solution:
                raise InternalConsistencyError(f"Pigeonhole assembly {t!r} is not a solution.")
            if keep(t):
                found.append(t)
            pool = pool.without(pair.x + pair.y)
    logger.debug(f"Built {len(found)} start solutions from pigeonhole pairs.")
    return found


def _size_two_zero_sum_distinct(A):
    classes = [c for c in A.classes.proper if c.size == 2 and c.sums_to_zero]
    return lambda t: all(t[c.members[0]] != t[c.members[1]] for c in classes)


def _shape_pair(classes, pattern):
    """Return the columns to replace for a solution with the given equality pattern."""
    for part in pattern.parts:
        if len(part) >= 2:
            j0, j1 = part[0], part[1]
            break
    else:
        return None
    if classes.class_of(j1).size == 1:
        j0, j1 = j1, j0
    c1 = classes.class_of(j1)
    if c1.size == 1:
        return None
    if not classes.same_class(j0, j1) or c1.size >= 3:
        j2 = min(j for j in c1.members if j not in (j0, j1))
        return j1, j2
    return j0, j1


def _shape_round(A, level, target, budget):
    up = [s for s in level if s.distinct >= target]
    groups = {}
    for s in level:
        if s.distinct < target:
            groups.setdefault(s.partition, []).append(s)
    for pattern, group in groups.items():
        pair = _shape_pair(A.classes, pattern)
        if pair is None:
            continue
        pool = group
        while len(pool) >= 2:
            rec = next(recombinations(A, pool, *pair), None)
            if rec is None:
                break
            budget.charge()
            if rec.solution.distinct < target:
                raise InternalConsistencyError(
                    f"Recombination {rec.solution!r} on {pair} has fewer than {target} distinct entries."
                )
            up.append(rec.solution)
            pool = _consume(pool, rec)
    return up


def _grow_shape(A, S, budget):
    flags = classify_theorems(A)
    if A.zero_columns or not flags.moderate:
        raise NotApplicableError(f"Cannot grow shapes for {A!r}.")
    if flags.shape_nonzero_sum:
        level = [SolutionTuple(A, [p] * A.k) for p in S]
    else:
        level = _class_pair_solutions(A, S, budget, _size_two_zero_sum_distinct(A))
    log_more(logger, f"Growing shapes from {len(level)} disjoint start solutions.")
    for target in range(2, A.k + 1):
        level = _shape_round(A, level, target, budget)
        log_more(logger, f"{len(level)} solutions with at least {target} distinct entries.")
        if not level:
            raise NotFoundError(f"No solution with {target} distinct entries could be grown.")
    witness = level[0]
    if witness.distinct != A.k or not witness.is_solution:
        raise InternalConsistencyError(f"Grown tuple {witness!r} is not a shape.")
    return witness


def grow_shape(A, S, override=False, budget=None, mode="flat"):
    """Grow a shape from constant or pigeonhole start solutions.

    Starting from pairwise disjoint solutions, each round raises the
    number of distinct entries by at least one: solutions are grouped by
    their equality pattern and, within a group, two equal entries are
    separated by recombining on a pair of equivalent columns.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        A system of type (RC) without zero columns to which a shape
        construction applies.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    override : bool
        Search below the threshold (Default value = False).
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Evaluation limit.
    mode : str
        Gamma mode of the threshold (Default value = "flat").

    Returns
    -------
    :class:`~balsys.contrib.witness.SolutionTuple`
        A solution with pairwise distinct entries.

    Raises
    ------
    NotApplicableError
        If the system has zero columns or no shape construction applies.
    BelowThresholdError
        Below the threshold without ``override``.
    NotFoundError
        If a round produces no solution at or above the threshold, or below
        it no solution of ``S`` has pairwise distinct entries.

    Notes
    -----
    Below the threshold a failed round is followed by exhaustive
    enumeration of the solutions in ``S``.

    """
    A = as_system(A)
    _require_same_field(A, S)
    if A.zero_columns:
        raise NotApplicableError("Strip the zero columns first or use find_shape().")
    _, required = _check_threshold("shape", A, S, override, mode)
    budget = as_budget(budget)
    try:
        return _grow_shape(A, S, budget)
    except NotFoundError as error:
        if len(S) >= required:
            raise
        log_more(logger, f"shape: growing failed below the threshold ({error}); enumerating.")
    witness = first_solution(A, S, _predicate("shape", A), budget)
    if witness is None:
        raise NotFoundError(f"No solution with {A.k} pairwise distinct entries in {len(S)} points.")
    return witness


def _fresh_points(S, used, count, generic, ctx):
    """Pick ``count`` unused points, each off the affine hull of the points before it if ``generic``."""
    chosen = []
    current = list(used)
    taken = set(used)
    for p in S:
        if len(chosen) == count:
            break
        if p in taken:
            continue
        if generic:
            if current and affine_dim(current + [p], ctx) == affine_dim(current, ctx):
                continue
        chosen.append(p)
        current.append(p)
        taken.add(p)
    if len(chosen) < count:
        raise NotFoundError(f"Only {len(chosen)} of {count} fresh points for the zero columns.")
    return chosen


def _assemble(A, columns, partial, S, generic):
    """Place a solution of the stripped system and fill the zero columns with fresh points."""
    points = [None] * A.k
    for j, p in zip(columns, partial.points):
        points[j] = p
    if A.zero_columns:
        fresh = _fresh_points(S, partial.points, len(A.zero_columns), generic, A.ctx)
        for j, p in zip(A.zero_columns, fresh):
            points[j] = p
    return SolutionTuple(A, points)


def _best_slices(S):
    """Return ``(i, alpha1, alpha2)`` maximizing the size of the second largest slice."""
    best = None
    arr = S.array
    for i in range(S.n):
        values, counts = np.unique(arr[:, i], return_counts=True)
        if len(values) < 2:
            continue
        order = np.lexsort((values, -counts))
        score = int(counts[order[1]])
        if best is None or score > best[0]:
            best = (score, i, int(values[order[0]]), int(values[order[1]]))
    if best is None:
        raise NotFoundError("The point set has no coordinate taking two values.")
    return best[1:]


def _separating_coordinates(points, skip, ctx):
    """Return coordinates whose rows, with the all-ones row, span every coordinate row of ``points``."""
    arr = np.asarray(points, dtype=np.int64)
    rows = [np.ones(len(points), dtype=np.int64)]
    chosen = []
    for c in range(arr.shape[1]):
        if c == skip:
            continue
        candidate = rows + [arr[:, c]]
        if rank(FqMatrix(ctx, np.vstack(candidate))) > len(rows):
            rows = candidate
            chosen.append(c)
    return chosen


def _recombine_generic(blocks, S, solve):
    first, rest = blocks[0], blocks[1:]
    if not rest:
        return [solve(first.system, S)]
    i, alpha1, alpha2 = _best_slices(S)
    y = solve(first.system, S.slice(i, alpha1))
    T = S.slice(i, alpha2)
    for c in _separating_coordinates(y.points, i, S.ctx):
        values, counts = np.unique(T.array[:, c], return_counts=True)
        T = T.slice(c, int(values[np.argmax(counts)]))
    logger.debug(f"Block at columns {first.columns}: slice {i}, remaining pool {len(T)}.")
    return [y] + _recombine_generic(rest, T, solve)


def recombine_blocks(A, S, mode="shape", solve_block=None, budget=None):
    """Solve a reducible system block by block and concatenate the block solutions.

    In ``shape`` mode each block is solved in the points the previous
    blocks left unused. In ``generic`` mode the first block is solved in
    one slice ``x_i = alpha1`` of the point set and the remaining blocks in
    the sub-slice of ``x_i = alpha2`` on which the coordinates needed to
    describe the first block's affine hull are constant; this keeps the
    relations of the concatenation inside the direct sum of the block
    rowspaces.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        A system with independent rows and no zero columns.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    mode : str
        ``"shape"`` or ``"generic"`` (Default value = "shape").
    solve_block : callable
        ``solve_block(system, S)`` returning a
        :class:`~balsys.contrib.witness.SolutionTuple`; defaults to the
        shape grower or the generic construction.
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Evaluation limit.

    Returns
    -------
    :class:`~balsys.contrib.witness.SolutionTuple`
        The concatenated solution of ``A``.

    Raises
    ------
    NotFoundError
        If a slice is too small or a block has no solution.

    """
    if mode not in RECOMBINE_MODES:
        raise ValueError(f"Unknown mode '{mode}', expected one of {RECOMBINE_MODES}.")
    A = as_system(A)
    budget = as_budget(budget)
    if solve_block is None:
        solver = _grow_shape if mode == "shape" else _generic_block
        solve_block = lambda system, pool: solver(system, pool, budget)  # noqa: E731
    blocks = decompose_irreducible(A)
    if len(blocks) == 1:
        return SolutionTuple(A, solve_block(A, S).points)
    if mode == "shape":
        parts = []
        pool = S
        for block in blocks:
            parts.append(solve_block(block.system, pool))
            pool = pool.without(parts[-1].points)
    else:
        parts = _recombine_generic(blocks, S, solve_block)
    points = [None] * A.k
    for block, part in zip(blocks, parts):
        for j, p in zip(block.columns, part.points):
            points[j] = p
    witness = SolutionTuple(A, points)
    ok = witness.distinct == A.k if mode == "shape" else is_generic(A, witness)
    if not witness.is_solution or not ok:
        raise InternalConsistencyError(f"Block recombination {witness!r} is not a {mode} solution.")
    log_more(logger, f"Recombined {len(blocks)} blocks in {mode} mode.")
    return witness


def _shape_witness(A, S, override=False, budget=None, mode="flat"):
    A = as_system(A)
    _check_threshold("shape", A, S, override, mode)
    budget = as_budget(budget)
    stripped, columns = A.stripped()
    partial = recombine_blocks(stripped, S, "shape", budget=budget)
    return _assemble(A, columns, partial, S.without(partial.points), generic=False)


def find_nontrivial(A, S, budget=None, threads=1):
    """Return a :class:`~balsys.contrib.pointset.SearchReport` for a solution with two distinct entries."""
    return run_finder("nontrivial", A, S, budget=budget, threads=threads)


def find_shape(A, S, override=False, budget=None, threads=1, mode="flat"):
    """Return a :class:`~balsys.contrib.pointset.SearchReport` for a shape of any system.

    Zero columns take fresh unused points; the remaining system is split
    into irreducible blocks that are solved by :func:`grow_shape` on
    disjoint pools.
    """
    return run_finder("shape", A, S, override=override, budget=budget, threads=threads, mode=mode)


def _pair_round(A, level, j1, j2, budget):
    up = []
    pool = []
    for s in level:
        (up if keeps_pair(A, s, j1, j2) else pool).append(s)
    kept = len(up)
    while len(pool) >= 2:
        try:
            rec = eliminate_breaking_pair(A, pool, j1, j2)
        except NotFoundError:
            break
        budget.charge()
        up.append(rec.solution)
        pool = _consume(pool, rec)
    logger.debug(f"Pair ({j1}, {j2}): {kept} kept, {len(up) - kept} recombined.")
    return up


def _eliminate_pairs(A, level, budget):
    for j1, j2 in A.classes.pairs():
        level = _pair_round(A, level, j1, j2, budget)
        log_more(logger, f"{len(level)} solutions keep the pairs up to ({j1}, {j2}).")
        if not level:
            raise NotFoundError(f"No solution keeps the pair ({j1}, {j2}).")
    return level


def _generic_block(A, S, budget):
    flags = classify_theorems(A)
    if A.zero_columns or not flags.temperate:
        raise NotApplicableError(f"No generic construction applies to {A!r}.")
    keep = lambda t: has_class_property(A, t)  # noqa: E731
    if flags.generic_zero_sum:
        level = _class_pair_solutions(A, S, budget, keep)
    else:
        level = [t for t in (SolutionTuple(A, [p] * A.k) for p in S) if keep(t)]
    log_more(logger, f"Eliminating {len(A.classes.pairs())} pairs from {len(level)} base solutions.")
    if not level:
        raise NotFoundError("No base solution.")
    for witness in _eliminate_pairs(A, level, budget):
        if is_generic(A, witness):
            return witness
    raise InternalConsistencyError("Every class-preserving solution failed the generic test.")


def find_generic(A, S, override=False, budget=None, mode="flat"):
    """Construct a generic solution.

    The base solutions have the property that every balanced relation
    preserving the column classes is a combination of the equations. For
    systems whose classes all sum to zero they come from pigeonhole pairs
    on the class representatives; for systems with one class more than
    their rank and no zero-sum class, constant solutions already qualify.
    Then, pair by pair, relations breaking a pair of equivalent columns are
    removed by recombination. The relations of a recombined solution are
    relations of its anchor, so earlier pairs stay unbroken, and the
    survivors are generic.

    Systems with several irreducible blocks are solved block by block on
    slices of ``S``; zero columns take fresh points off the affine hull of
    the others.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system; every irreducible block must admit a generic
        construction.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    override : bool
        Search below the threshold (Default value = False).
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Evaluation limit.
    mode : str
        Gamma mode of the threshold (Default value = "flat").

    Returns
    -------
    :class:`~balsys.contrib.witness.SolutionTuple`
        A generic solution.

    Raises
    ------
    NotApplicableError
        If a block admits no generic construction.
    BelowThresholdError
        Below the threshold without ``override``.
    NotFoundError
        If a round runs dry.

    """
    A = as_system(A)
    _require_same_field(A, S)
    _check_threshold("generic", A, S, override, mode)
    budget = as_budget(budget)
    stripped, columns = A.stripped()
    partial = recombine_blocks(stripped, S, "generic", budget=budget)
    witness = _assemble(A, columns, partial, S, generic=True)
    if not is_generic(A, witness):
        raise InternalConsistencyError(f"Assembled tuple {witness!r} is not generic.")
    return witness


def high_rank_bound(A):
    """Return ``min(k - l, k - 2)``, the affine dimension guaranteed by :func:`find_high_rank`."""
    A = as_system(A)
    return min(A.k - A.classes.count, A.k - 2)


def find_high_rank(A, S, override=False, budget=None, mode="flat"):
    """Construct a solution whose balanced relations all preserve the column classes.

    If every class sums to zero this is :func:`find_generic`. Otherwise the
    pair eliminations run from constant solutions, and the result spans an
    affine subspace of dimension at least ``k - l``.

    Raises
    ------
    NotApplicableError
        Unless the system is irreducible, of type (RC) and without zero
        columns.

    """
    A = as_system(A)
    _require_same_field(A, S)
    _check_threshold("highrank", A, S, override, mode)
    budget = as_budget(budget)
    stripped, _ = A.stripped()
    if classify_theorems(stripped).base_zero_sum:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BelowThresholdWarning)
            witness = find_generic(A, S, override=True, budget=budget, mode=mode)
    else:
        level = [SolutionTuple(stripped, [p] * stripped.k) for p in S]
        witness = SolutionTuple(A, _eliminate_pairs(stripped, level, budget)[0].points)
        if witness.affine_dim < A.k - A.classes.count:
            raise InternalConsistencyError(
                f"{witness!r} spans dimension {witness.affine_dim} < {A.k - A.classes.count}."
            )
    if witness.affine_dim < high_rank_bound(A):
        raise InternalConsistencyError(f"{witness!r} misses the dimension bound.")
    return witness


def w_system(ctx):
    """Return the W system over the field ``ctx``."""
    return make_system("w", ctx)


def find_shape_w(S, override=False, generic=False, budget=None, threads=1, mode="flat"):
    """Construct a shape (optionally a generic solution) of the W system.

    Disjoint non-trivial three-term progressions ``(a, b, c)`` are padded to
    the W solutions ``(a, b, b, c, c)``; recombining on the equivalent
    columns 1 and 3 gives ``(a, b', b, c'', c)`` with ``b'`` and ``c''`` taken
    from other progressions. Its entries are pairwise distinct because
    ``c'' - b' = b - a``. The generic variant scans the recombinations
    until ``b'`` leaves the line through the anchor progression.

    Raises
    ------
    NotApplicableError
        In characteristic 2.
    NotFoundError
        If too few progressions or no suitable recombination exist.

    """
    ctx = S.ctx
    if ctx.p == 2:
        raise NotApplicableError("The W system has no shapes in characteristic 2.")
    W = w_system(ctx)
    _check_threshold("wshape", W, S, override, mode)
    budget = as_budget(budget)
    ap = SystemMatrix.from_signed(ctx, [[1, -2, 1]])
    progressions = harvest_disjoint(ap, S, len(S) // 3, "nontrivial", budget, threads, partial=True)
    log_more(logger, f"Harvested {len(progressions)} disjoint progressions.")
    if len(progressions) < 2:
        raise NotFoundError(f"Only {len(progressions)} disjoint progressions.")
    padded = [SolutionTuple(W, (a, b, b, c, c)) for a, b, c in progressions]
    if generic:
        for rec in recombinations(W, padded, 1, 3):
            budget.charge()
            if rec.solution.affine_dim >= 2:
                witness = rec.solution
                break
        else:
            raise NotFoundError("Every recombination stays on the line of its anchor.")
        if not is_generic(W, witness):
            raise InternalConsistencyError(f"{witness!r} spans a plane but is not generic.")
    else:
        witness = single_replacement(W, padded, 1, 3).solution
    if witness.distinct != 5:
        raise InternalConsistencyError(f"W recombination {witness!r} is not a shape.")
    return witness


def _predicate(kind, A, generic=False):
    if kind == "nontrivial":
        return lambda t: t.distinct > 1
    if kind == "shape":
        return lambda t: t.distinct == t.k
    if kind == "generic":
        return lambda t: is_generic(A, t)
    if kind == "highrank":
        bound = high_rank_bound(A)
        return lambda t: t.affine_dim >= bound
    if generic:
        return lambda t: t.distinct == t.k and is_generic(A, t)
    return lambda t: t.distinct == t.k


def _construct(kind, A, S, override, budget, threads, mode, generic):
    if kind == "shape":
        return _shape_witness(A, S, override, budget, mode)
    if kind == "generic":
        return find_generic(A, S, override, budget, mode)
    if kind == "highrank":
        return find_high_rank(A, S, override, budget, mode)
    return find_shape_w(S, override, generic, budget, threads, mode)


def run_finder(
    kind, A, S, override=False, budget=None, threads=1, mode="flat", generic=False, fallback=True
):
    """Run a finder and report the outcome.

    Parameters
    ----------
    kind : str
        One of :data:`FINDER_KINDS`.
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system; ignored for ``wshape``.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    override : bool
        Search below the threshold (Default value = False).
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Evaluation limit.
    threads : int
        Threads for exhaustive enumeration (Default value = 1).
    mode : str
        Gamma mode of the thresholds (Default value = "flat").
    generic : bool
        Ask ``wshape`` for a generic solution (Default value = False).
    fallback : bool
        Enumerate exhaustively when the construction fails
        (Default value = True).

    Returns
    -------
    :class:`~balsys.contrib.pointset.SearchReport`
        ``found`` with a re-verified witness, ``exhausted`` if exhaustive
        enumeration found nothing, ``budget_exceeded``, or
        ``below_threshold`` without ``override``.

    Raises
    ------
    NotApplicableError
        If no construction applies and ``override`` is not set.

    """
    if kind not in FINDER_KINDS:
        raise ValueError(f"Unknown finder '{kind}', expected one of {FINDER_KINDS}.")
    budget = as_budget(budget)
    A = w_system(S.ctx) if kind == "wshape" else as_system(A)
    _require_same_field(A, S)
    predicate = _predicate(kind, A, generic)
    info = {}
    witness = None
    used = "constructive"
    if kind != "nontrivial":
        try:
            threshold_kind, required = required_size(kind, A, S.n, mode)
        except NotApplicableError as error:
            if not override:
                raise
            log_more(logger, f"{error} Enumerating exhaustively.")
        else:
            info = {
                "kind": threshold_kind,
                "required": required,
                "actual": len(S),
                "override": len(S) < required,
            }
            if len(S) < required and not override:
                logger.info(f"{kind}: {len(S)} points are below the threshold {required}.")
                return SearchReport(kind, BELOW_THRESHOLD, thresholds=info)
            try:
                witness = _construct(kind, A, S, override, budget, threads, mode, generic)
            except BudgetExceededError:
                return SearchReport(kind, BUDGET_EXCEEDED, thresholds=info, evaluations=budget.evaluations)
            except (NotFoundError, NotApplicableError) as error:
                log_more(logger, f"{kind}: construction failed ({error}).")
    if witness is None:
        if kind != "nontrivial" and not fallback:
            return SearchReport(kind, EXHAUSTED, thresholds=info, evaluations=budget.evaluations)
        used = "exhaustive"
        try:
            witness = first_solution(A, S, predicate, budget, threads)
        except BudgetExceededError:
            return SearchReport(
                kind, BUDGET_EXCEEDED, mode=used, thresholds=info, evaluations=budget.evaluations
            )
        if witness is None:
            return SearchReport(kind, EXHAUSTED, mode=used, thresholds=info, evaluations=budget.evaluations)
    if not witness.is_solution or not predicate(witness):
        raise InternalConsistencyError(f"{kind} witness {witness!r} fails its re-check.")
    certificate = dict(witness.flags._as_dict(), affine_dim=witness.affine_dim, distinct=witness.distinct)
    log_more(logger, f"{kind}: found {witness!r} ({used}).")
    return SearchReport(
        kind,
        FOUND,
        witness=witness,
        mode=used,
        certificate=certificate,
        thresholds=info,
        evaluations=budget.evaluations,
    )


__all__ = [
    "FINDER_KINDS",
    "RECOMBINE_MODES",
    "find_generic",
    "find_high_rank",
    "find_nontrivial",
    "find_shape",
    "find_shape_w",
    "grow_shape",
    "high_rank_bound",
    "recombine_blocks",
    "required_size",
    "run_finder",
    "w_system",
]

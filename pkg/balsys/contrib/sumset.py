# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Sumsets over affinely independent tuples, progressions in difference sets and
tricoloured sum-free sequences.

The sumset ``b_1 S_1 +' ... +' b_l S_l`` collects the sums
``b_1 x_1 + ... + b_l x_l`` over the tuples ``(x_1, ..., x_l)`` in
``S_1 x ... x S_l`` whose entries are affinely independent.
"""

import logging
from itertools import product
from typing import NamedTuple

import numpy as np

from ..core.algebra import FqMatrix, affine_dim
from ..core.errors import InternalConsistencyError
from ..core.field import FieldCtx, parse_order
from .catalog import make_system
from .errors import BudgetExceededError, NotApplicableError
from .finder import find_generic
from .pigeonhole import pigeonhole_pair
from .pointset import PointSet, as_budget
from .system import SystemMatrix, as_system
from .utility import log_more
from .witness import SolutionTuple, is_linearly_generic

logger = logging.getLogger(__name__)

AIR_ROUTES = ("auto", "pigeonhole", "extended")
MAX_TRICOLOURED_CANDIDATES = 4096


class AirSumsetSpec(NamedTuple):
    """Coefficients ``b_1, ..., b_l`` and source sets ``S_1, ..., S_l``."""

    coefficients: tuple
    sets: tuple

    @property
    def ctx(self):
        return self.sets[0].ctx

    def check(self):
        """Raise ValueError unless the coefficients are nonzero and match the sets."""
        if not self.sets or len(self.coefficients) != len(self.sets):
            raise ValueError("Need one source set per coefficient.")
        ctx = self.ctx
        if any(ctx.from_int(b) == 0 for b in self.coefficients):
            raise ValueError(f"The coefficients {self.coefficients} must be nonzero.")
        if len({(s.ctx, s.n) for s in self.sets}) != 1:
            raise ValueError("All source sets must lie in the same space.")


def _scaled_sum(ctx, coefficients, points):
    total = np.zeros(len(points[0]), dtype=np.int64)
    for b, x in zip(coefficients, points):
        total = ctx.add(total, ctx.mul(int(ctx.from_int(b)), np.asarray(x, dtype=np.int64)))
    return tuple(int(c) for c in total)


def air_sumset(spec, budget=None, witnesses=False):
    """Return the sumset over affinely independent tuples.

    Parameters
    ----------
    spec : :class:`AirSumsetSpec`
        Coefficients and source sets.
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        One evaluation per tuple of ``S_1 x ... x S_l``.
    witnesses : bool
        Also return a preimage tuple for every sum (Default value = False).

    Returns
    -------
    :class:`~balsys.contrib.pointset.PointSet` or tuple
        The sums in order of first appearance, and with ``witnesses`` a dict
        mapping each sum to its first preimage.

    Raises
    ------
    BudgetExceededError
        If the budget runs out.

    """
    spec.check()
    ctx = spec.ctx
    budget = as_budget(budget)
    l = len(spec.sets)
    found = {}
    for points in product(*spec.sets):
        budget.charge()
        if l > 1 and affine_dim(points, ctx) != l - 1:
            continue
        found.setdefault(_scaled_sum(ctx, spec.coefficients, points), points)
    result = PointSet(ctx, spec.sets[0].n, found)
    logger.debug(f"Sumset of {l} sets has {len(result)} points.")
    return (result, found) if witnesses else result


class AirGenericResult(NamedTuple):
    """A linearly generic solution with entries in a sumset (or zero).

    ``preimages[j]`` is the affinely independent tuple whose weighted sum is
    entry ``j``, or None where the entry is zero.
    """

    solution: SolutionTuple
    source: tuple
    route: str
    preimages: tuple

    def _as_dict(self):
        return {
            "tuple": [list(p) for p in self.solution.points],
            "route": self.route,
            "preimages": [None if t is None else [list(p) for p in t] for t in self.preimages],
            "linearly_generic": True,
        }


def _check_coefficients(ctx, b):
    b = tuple(int(c) for c in b)
    if len(b) < 2:
        raise ValueError("Need at least two coefficients.")
    if any(ctx.from_int(c) == 0 for c in b):
        raise ValueError(f"The coefficients {b} must be nonzero in F_{ctx.label}.")
    if ctx.from_int(sum(b)) != 0:
        raise NotApplicableError(f"The coefficients {b} do not sum to zero in F_{ctx.label}.")
    return b


def extended_system(A, b):
    """Return ``[b_1 A | b_2 A | ... | b_l A]``."""
    A = as_system(A)
    ctx = A.ctx
    blocks = [ctx.mul(int(ctx.from_int(c)), A.A.entries) for c in b]
    return SystemMatrix(FqMatrix(ctx, np.hstack(blocks)))


def generic_in_air_sumset(A, b, S, route="auto", override=False, budget=None, mode="flat"):
    """Find a linearly generic solution of ``A`` in ``(b_1 S +' ... +' b_l S) u {0}``.

    The ``pigeonhole`` route (two coefficients) takes a pigeonhole pair
    ``x, y`` of ``A`` and returns ``b_1 (x_j - y_j)``. The ``extended`` route
    finds a generic solution ``x`` of ``[b_1 A | ... | b_l A]`` and folds it to
    ``y_j = sum_r b_r x_(j + (r - 1) k)``. In both cases an entry is zero
    exactly when its preimage tuple is affinely dependent.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        Any system.
    b : sequence of int
        Nonzero coefficients summing to zero.
    S : :class:`~balsys.contrib.pointset.PointSet`
        The point set.
    route : str
        ``auto`` (pigeonhole for two coefficients), ``pigeonhole`` or
        ``extended`` (Default value = "auto").

    Returns
    -------
    :class:`AirGenericResult`
        The solution and the preimage of each entry.

    Raises
    ------
    NotApplicableError
        If the coefficients do not sum to zero.
    BelowThresholdError
        Below the threshold of the route without ``override``.

    """
    A = as_system(A)
    ctx = A.ctx
    b = _check_coefficients(ctx, b)
    if route not in AIR_ROUTES:
        raise ValueError(f"Unknown route '{route}', expected one of {AIR_ROUTES}.")
    if route == "auto":
        route = "pigeonhole" if len(b) == 2 else "extended"
    if route == "pigeonhole" and len(b) != 2:
        raise ValueError("The pigeonhole route needs exactly two coefficients.")
    budget = as_budget(budget)
    k = A.k
    if route == "pigeonhole":
        pair = pigeonhole_pair(A, S, override=override, budget=budget)
        source = tuple(pair.x) + tuple(pair.y)
    else:
        source = find_generic(extended_system(A, b), S, override=override, budget=budget, mode=mode).points
    l = len(b)
    points, preimages = [], []
    for j in range(k):
        tup = tuple(source[j + r * k] for r in range(l))
        value = _scaled_sum(ctx, b, tup)
        independent = affine_dim(tup, ctx) == l - 1
        if not independent and any(value):
            raise InternalConsistencyError(f"Entry {j} comes from a dependent tuple but is {value}.")
        points.append(value)
        preimages.append(tup if independent else None)
    solution = SolutionTuple(A, points)
    if not is_linearly_generic(A, solution):
        raise InternalConsistencyError(f"Folded tuple {solution!r} is not linearly generic.")
    log_more(logger, f"Linearly generic sumset solution via {route}: {solution!r}.")
    return AirGenericResult(solution, tuple(source), route, tuple(preimages))


class APWitness(NamedTuple):
    """A progression ``d_j = x_j - y_j`` in the difference set."""

    progression: tuple
    x: tuple
    y: tuple

    def _as_dict(self):
        return {
            "progression": [list(p) for p in self.progression],
            "x": [list(p) for p in self.x],
            "y": [list(p) for p in self.y],
        }


def _is_progression(ctx, points):
    arr = np.asarray(points, dtype=np.int64)
    steps = ctx.sub(arr[1:], arr[:-1])
    return bool(np.all(steps == steps[0]))


def ap_in_difference(S, k, override=False, budget=None):
    """Find a non-trivial ``k``-term progression in ``(S - S) \\ {0}``.

    A pigeonhole pair of the second-difference matrix gives ``x, y`` in
    ``S^k`` whose differences ``x_j - y_j`` form a progression and satisfy no
    further relation; in particular they are nonzero and pairwise distinct.

    Raises
    ------
    NotApplicableError
        Over a non-prime field, or unless ``3 <= k <= p``.
    BelowThresholdError
        If ``|S| < p^(1 + (1 - 1/k) n)`` without ``override``.

    """
    ctx = S.ctx
    if ctx.s != 1:
        raise NotApplicableError("Progressions in difference sets need a prime field.")
    if not 3 <= k <= ctx.p:
        raise NotApplicableError(f"Need 3 <= k <= p = {ctx.p}, got k = {k}.")
    M = make_system("ap", ctx, k=k)
    pair = pigeonhole_pair(M, S, override=override, budget=budget)
    diffs = tuple(
        tuple(int(c) for c in ctx.sub(np.asarray(x), np.asarray(y))) for x, y in zip(pair.x, pair.y)
    )
    zero = tuple([0] * S.n)
    if (
        not M.is_solution(diffs)
        or not _is_progression(ctx, diffs)
        or zero in diffs
        or len(set(diffs)) != k
    ):
        raise InternalConsistencyError(f"{diffs} is not a non-trivial progression of nonzero differences.")
    return APWitness(diffs, pair.x, pair.y)


class TricolouredSeq(NamedTuple):
    """Triples ``(x_i, y_i, z_i)``; valid iff ``x_i + y_j + z_l = 0`` exactly when ``i = j = l``."""

    triples: tuple

    def __len__(self):
        return len(self.triples)

    def _as_dict(self):
        return [[list(v) for v in t] for t in self.triples]


def verify_tricoloured(seq, ctx):
    """Return True iff the sequence is tricoloured sum-free."""
    triples = seq.triples if isinstance(seq, TricolouredSeq) else tuple(seq)
    if not triples:
        return True
    arr = np.asarray(triples, dtype=np.int64)
    X, Y, Z = arr[:, 0], arr[:, 1], arr[:, 2]
    sums = ctx.add(ctx.add(X[:, None, None, :], Y[None, :, None, :]), Z[None, None, :, :])
    zero = ~np.any(sums, axis=-1)
    L = len(triples)
    diagonal = np.zeros((L, L, L), dtype=bool)
    diagonal[np.arange(L), np.arange(L), np.arange(L)] = True
    return bool(np.array_equal(zero, diagonal))


class TricolouredResult(NamedTuple):
    """Longest tricoloured sum-free sequence found; ``exact`` is False if the budget ran out."""

    length: int
    sequence: TricolouredSeq
    exact: bool
    evaluations: int

    def _as_dict(self):
        return {
            "length": self.length,
            "exact": self.exact,
            "evaluations": self.evaluations,
            "sequence": self.sequence._as_dict(),
        }


def max_tricoloured(q, n, budget=None):
    """Return the longest tricoloured sum-free sequence in F_q^n.

    A triple is fixed by ``(x, y)`` with ``z = -x - y``. Translating the
    three coordinates independently preserves validity, so the first triple
    is ``(0, 0, 0)``; further triples are added in increasing order.

    Parameters
    ----------
    q : int, str or :class:`~balsys.core.field.FieldCtx`
        The field.
    n : int
        Dimension.
    budget : :class:`~balsys.contrib.pointset.SearchBudget` or int
        Limit on search nodes.

    Raises
    ------
    ValueError
        If there are more than :data:`MAX_TRICOLOURED_CANDIDATES` triples.

    """
    ctx = q if isinstance(q, FieldCtx) else parse_order(q)
    budget = as_budget(budget)
    full = PointSet.full(ctx, n)
    if len(full) ** 2 > MAX_TRICOLOURED_CANDIDATES:
        raise ValueError(f"F_{ctx.label}^{n} has too many triples for an exact search.")
    zero = tuple([0] * n)
    candidates = []
    for x, y in product(full, repeat=2):
        z = tuple(int(c) for c in ctx.neg(ctx.add(np.asarray(x), np.asarray(y))))
        if (x, y, z) != (zero, zero, zero):
            candidates.append((x, y, z))
    best = [[(zero, zero, zero)]]
    chosen = [(zero, zero, zero)]

    def descend(start):
        budget.charge()
        if len(chosen) > len(best[0]):
            best[0] = list(chosen)
        if len(chosen) + (len(candidates) - start) <= len(best[0]):
            return
        for i in range(start, len(candidates)):
            t = candidates[i]
            if any(t[c] == s[c] for s in chosen for c in range(3)):
                continue
            chosen.append(t)
            if verify_tricoloured(chosen, ctx):
                descend(i + 1)
            chosen.pop()

    exact = True
    try:
        descend(0)
    except BudgetExceededError:
        exact = False
    seq = TricolouredSeq(tuple(best[0]))
    log_more(logger, f"Longest tricoloured sequence in F_{ctx.label}^{n}: {len(seq)} (exact={exact}).")
    return TricolouredResult(len(seq), seq, exact, budget.evaluations)


__all__ = [
    "AIR_ROUTES",
    "APWitness",
    "AirGenericResult",
    "AirSumsetSpec",
    "TricolouredResult",
    "TricolouredSeq",
    "air_sumset",
    "ap_in_difference",
    "extended_system",
    "generic_in_air_sumset",
    "max_tricoloured",
    "verify_tricoloured",
]

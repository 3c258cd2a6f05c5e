# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Point sets, search budgets and search reports."""

import logging
import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..core.errors import DimensionError
from ..core.field import point_indices
from .errors import BudgetExceededError

logger = logging.getLogger(__name__)


class PointSet:
    """An ordered set of vectors in F_q^n.

    Iteration follows insertion order; membership tests are vectorised over
    the base-q indices of the points.

    Parameters
    ----------
    ctx : :class:`~balsys.core.field.FieldCtx`
        The field.
    n : int
        The dimension.
    points : iterable
        Coordinate sequences of length ``n``.

    Raises
    ------
    DimensionError
        If a point has the wrong length.
    ValueError
        If a point occurs twice.

    """

    def __init__(self, ctx, n, points=()):
        self._ctx = ctx
        self._n = int(n)
        pts = tuple(tuple(int(c) for c in p) for p in points)
        for p in pts:
            if len(p) != self._n:
                raise DimensionError(f"Point {p} does not lie in F_{ctx.label}^{self._n}.")
        if len(set(pts)) != len(pts):
            raise ValueError("A point set cannot contain a point twice.")
        self._points = pts
        self._array = np.array(pts, dtype=np.int64).reshape(len(pts), self._n)
        ctx.check(self._array)
        self._position = {p: i for i, p in enumerate(pts)}
        self._sorted = np.sort(point_indices(self._array, ctx.q)) if pts else np.array([])

    @classmethod
    def full(cls, ctx, n):
        """Return F_q^n in lexicographic order."""
        return cls(ctx, n, product(range(ctx.q), repeat=n))

    @classmethod
    def random(cls, ctx, n, size, seed=0):
        """Return ``size`` distinct random points, sorted lexicographically.

        Raises
        ------
        ValueError
            If ``size`` exceeds ``q^n``.

        """
        total = ctx.q ** n
        if not 0 <= size <= total:
            raise ValueError(f"Cannot choose {size} points out of {total}.")
        rng = np.random.default_rng(seed)
        chosen = np.sort(rng.choice(total, size=size, replace=False))
        points = []
        for idx in chosen.tolist():
            coords = []
            for _ in range(n):
                coords.append(idx % ctx.q)
                idx //= ctx.q
            points.append(tuple(reversed(coords)))
        return cls(ctx, n, points)

    @property
    def ctx(self):
        """:class:`~balsys.core.field.FieldCtx`: The field."""
        return self._ctx

    @property
    def n(self):
        """int: The dimension."""
        return self._n

    @property
    def points(self):
        """tuple: The points in order."""
        return self._points

    @property
    def array(self):
        """numpy.ndarray: ``|S| x n`` array of the points."""
        return self._array

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __getitem__(self, i):
        return self._points[i]

    def __contains__(self, p):
        return tuple(int(c) for c in p) in self._position

    def position(self, p):
        """Return the position of point ``p``."""
        return self._position[tuple(int(c) for c in p)]

    def member_mask(self, array):
        """Return a boolean array telling which rows (last axis) of ``array`` are in the set."""
        array = np.asarray(array, dtype=np.int64)
        if not len(self._points):
            return np.zeros(array.shape[:-1], dtype=bool)
        return np.isin(point_indices(array, self._ctx.q), self._sorted)

    def without(self, points):
        """Return the set with the given points removed (order kept)."""
        drop = {tuple(int(c) for c in p) for p in points}
        return PointSet(self._ctx, self._n, (p for p in self._points if p not in drop))

    def subset(self, predicate):
        """Return the points satisfying ``predicate`` (order kept)."""
        return PointSet(self._ctx, self._n, (p for p in self._points if predicate(p)))

    def slice(self, i, value):
        """Return the points whose ``i``-th coordinate equals ``value``."""
        return self.subset(lambda p: p[i] == value)

    def _as_dict(self):
        return {"q": self._ctx.q, "n": self._n, "points": [list(p) for p in self._points]}

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._ctx == other._ctx and self._points == other._points

    def __hash__(self):
        return hash((self._ctx, self._points))

    def __repr__(self):
        return f"PointSet(q={self._ctx.label}, n={self._n}, size={len(self)})"


class SearchBudget:
    """Limits and bookkeeping of a search.

    Parameters
    ----------
    max_evaluations : int
        Maximal number of candidate evaluations, or None for no limit.
    seed : int
        Seed of all randomised choices (Default value = 0).
    time_limit : float
        Optional wall-clock limit in seconds. Runs cut by the clock are not
        reproducible.

    """

    def __init__(self, max_evaluations=None, seed=0, time_limit=None):
        if max_evaluations is not None and max_evaluations < 0:
            raise ValueError(f"Budget must be non-negative, got {max_evaluations}.")
        self.max_evaluations = max_evaluations
        self.seed = seed
        self.time_limit = time_limit
        self.evaluations = 0
        self._start = time.monotonic()

    @property
    def remaining(self):
        """int: Evaluations left, or None without a limit."""
        if self.max_evaluations is None:
            return None
        return max(self.max_evaluations - self.evaluations, 0)

    def charge(self, count=1):
        """Count evaluations; raise when the limit is passed."""
        self.evaluations += count
        if self.max_evaluations is not None and self.evaluations > self.max_evaluations:
            self.evaluations = self.max_evaluations
            raise BudgetExceededError(self.evaluations)
        self.check_time()

    def check_time(self):
        """Raise :class:`BudgetExceededError` once the wall-clock limit has passed."""
        if self.time_limit is not None and time.monotonic() - self._start > self.time_limit:
            raise BudgetExceededError(self.evaluations)

    def rng(self, stream=0):
        """Return a numpy Generator derived from the seed and a stream number."""
        return np.random.default_rng([self.seed, stream])

    def __repr__(self):
        return (
            f"SearchBudget(max_evaluations={self.max_evaluations}, seed={self.seed}, "
            f"evaluations={self.evaluations})"
        )


def as_budget(budget):
    """Return ``budget`` as a :class:`SearchBudget` (None means unlimited)."""
    if budget is None:
        return SearchBudget()
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(int(budget))


FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"
BELOW_THRESHOLD = "below_threshold"

OUTCOMES = (FOUND, EXHAUSTED, BUDGET_EXCEEDED, BELOW_THRESHOLD)


@dataclass
class SearchReport:
    """Outcome of a finder.

    Attributes
    ----------
    kind : str
        The finder, e.g. ``"shape"``.
    outcome : str
        One of ``found``, ``exhausted``, ``budget_exceeded`` and
        ``below_threshold``.
    witness : object
        The witness (usually a :class:`~balsys.contrib.witness.SolutionTuple`).
    mode : str
        ``constructive`` or ``exhaustive``.
    certificate : dict
        The predicates that were re-checked on the witness.
    thresholds : dict
        ``{"kind", "required", "actual", "override"}`` when a threshold applies.
    evaluations : int
        Candidate evaluations spent.

    """

    kind: str
    outcome: str
    witness: object = None
    mode: str = "constructive"
    certificate: dict = field(default_factory=dict)
    thresholds: dict = field(default_factory=dict)
    evaluations: int = 0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise ValueError(f"Unknown outcome '{self.outcome}'.")

    @property
    def found(self):
        """bool: Whether a witness was found."""
        return self.outcome == FOUND

    def _as_dict(self):
        witness = self.witness
        if hasattr(witness, "points"):
            witness = [list(p) for p in witness.points]
        return {
            "kind": self.kind,
            "outcome": self.outcome,
            "witness": witness,
            "mode": self.mode,
            "certificate": self.certificate,
            "thresholds": self.thresholds,
            "evaluations": self.evaluations,
            "details": self.details,
        }


__all__ = [
    "BELOW_THRESHOLD",
    "BUDGET_EXCEEDED",
    "EXHAUSTED",
    "FOUND",
    "OUTCOMES",
    "PointSet",
    "SearchBudget",
    "SearchReport",
    "as_budget",
]

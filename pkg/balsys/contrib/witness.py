# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Classification of tuples of vectors against a system.

A tuple ``(x_1, ..., x_k)`` of vectors in F_q^n is

* *non-trivial* if its entries are not all equal,
* a *shape* if its entries are pairwise distinct,
* *generic* for a system ``A`` if it solves ``A`` and every balanced
  relation ``sum_j b_j x_j = 0, sum_j b_j = 0`` is a combination of the
  equations of ``A``,
* *linearly generic* if the same holds for every relation, balanced or not.

The balanced relations of a tuple form the space ``Ann_bal``. Its dimension
and the dimension of the affine hull of the entries always add up to
``k - 1``.
"""

import logging
from functools import cached_property
from typing import NamedTuple

import numpy as np

from ..core.algebra import (
    FqMatrix,
    affine_dim,
    augmented_matrix,
    coordinate_matrix,
    kernel_basis,
    rowspace_contains_all,
)
from ..core.errors import DimensionError, InternalConsistencyError
from .errors import DegenerateListError
from .system import as_system, breaks_pair, pair_functional

logger = logging.getLogger(__name__)


def _coords(points):
    out = tuple(tuple(int(c) for c in p) for p in points)
    if out and len({len(p) for p in out}) != 1:
        raise DimensionError("All entries of a tuple must have the same length.")
    return out


def ann_bal(points, ctx=None):
    """Return a basis of the balanced relations of a tuple.

    Parameters
    ----------
    points : sequence
        ``k >= 1`` vectors of equal length.
    ctx : :class:`~balsys.core.field.FieldCtx`
        The field; required for plain coordinate tuples.

    Returns
    -------
    list[tuple]
        Basis vectors ``b`` of length ``k`` with ``sum_j b_j = 0`` and
        ``sum_j b_j x_j = 0``, ordered by their free column.

    """
    return [v.coords for v in kernel_basis(augmented_matrix(points, ctx))]


def linear_annihilator(points, ctx=None):
    """Return a basis of all relations ``sum_j b_j x_j = 0`` of a tuple."""
    return [v.coords for v in kernel_basis(coordinate_matrix(points, ctx))]


class SetPartition(NamedTuple):
    """Partition of the positions of a tuple by equality of entries.

    Parts are ordered by their smallest member.
    """

    parts: tuple

    @property
    def lam(self):
        """int: Number of parts, i.e. of distinct entries."""
        return len(self.parts)

    def part_of(self, j):
        """Return the part containing position ``j``."""
        for part in self.parts:
            if j in part:
                return part
        raise IndexError(j)

    def same_part(self, j1, j2):
        """Return True iff positions ``j1`` and ``j2`` hold equal entries."""
        return j2 in self.part_of(j1)

    def _as_dict(self):
        return [list(p) for p in self.parts]


def partition_pattern(points):
    """Return the :class:`SetPartition` of a tuple by equality of its entries."""
    groups = {}
    for j, p in enumerate(_coords(points)):
        groups.setdefault(p, []).append(j)
    return SetPartition(tuple(sorted(tuple(g) for g in groups.values())))


def disjoint(t1, t2):
    """Return True iff two tuples share no entry.

    Raises
    ------
    DimensionError
        If the entries have different lengths.

    """
    a, b = _coords(t1), _coords(t2)
    if a and b and len(a[0]) != len(b[0]):
        raise DimensionError(f"Cannot compare vectors of length {len(a[0])} and {len(b[0])}.")
    return set(a).isdisjoint(b)


def check_pairwise_disjoint(tuples):
    """Raise :class:`DegenerateListError` unless the tuples are pairwise disjoint."""
    seen = {}
    for i, t in enumerate(tuples):
        for p in set(_coords(t)):
            if p in seen:
                raise DegenerateListError(f"Tuples {seen[p]} and {i} share the entry {p}.")
            seen[p] = i


class TupleFlags(NamedTuple):
    """The predicates of :func:`classify_tuple`."""

    solution: bool
    nontrivial: bool
    shape: bool
    generic: bool
    linearly_generic: bool

    def _as_dict(self):
        return self._asdict()


class SolutionTuple:
    """A tuple of vectors tied to a system, with lazily cached classification.

    Parameters
    ----------
    system : :class:`~balsys.contrib.system.SystemMatrix`
        The system.
    points : sequence
        ``k`` vectors of equal length ``n``.

    Raises
    ------
    DimensionError
        If the tuple length differs from the number of variables.

    """

    def __init__(self, system, points):
        self._system = as_system(system)
        self._points = _coords(points)
        if len(self._points) != self._system.k:
            raise DimensionError(
                f"Tuple of length {len(self._points)} for a system in {self._system.k} variables."
            )
        self._system.ctx.check(np.asarray(self._points, dtype=np.int64))

    @property
    def system(self):
        """:class:`~balsys.contrib.system.SystemMatrix`: The system."""
        return self._system

    @property
    def ctx(self):
        """:class:`~balsys.core.field.FieldCtx`: The field."""
        return self._system.ctx

    @property
    def points(self):
        """tuple: The entries as coordinate tuples."""
        return self._points

    @property
    def k(self):
        """int: Tuple length."""
        return len(self._points)

    @property
    def n(self):
        """int: Dimension of the entries."""
        return len(self._points[0])

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __getitem__(self, j):
        return self._points[j]

    @cached_property
    def is_solution(self):
        """bool: Whether the tuple solves the system."""
        return self._system.is_solution(self._points)

    @cached_property
    def ann_bal(self):
        """list: Basis of the balanced relations."""
        return ann_bal(self._points, self.ctx)

    @cached_property
    def affine_dim(self):
        """int: Dimension of the affine hull of the entries."""
        return affine_dim(self._points, self.ctx)

    @cached_property
    def partition(self):
        """:class:`SetPartition`: Equality pattern of the entries."""
        return partition_pattern(self._points)

    @cached_property
    def flags(self):
        """:class:`TupleFlags`: The full classification."""
        return classify_tuple(self._system, self)

    @property
    def distinct(self):
        """int: Number of distinct entries."""
        return self.partition.lam

    def with_entries(self, replacements):
        """Return a copy with the entries at the given positions replaced.

        Parameters
        ----------
        replacements : dict
            Maps positions to new entries.

        """
        points = list(self._points)
        for j, p in replacements.items():
            points[j] = p
        return SolutionTuple(self._system, points)

    def _as_dict(self):
        return {"tuple": [list(p) for p in self._points], "flags": self.flags._as_dict()}

    def __eq__(self, other):
        if not isinstance(other, SolutionTuple):
            return NotImplemented
        return self._system == other._system and self._points == other._points

    def __hash__(self):
        return hash((self._system, self._points))

    def __repr__(self):
        return f"SolutionTuple({list(self._points)})"


def _as_tuple(A, points):
    if isinstance(points, SolutionTuple):
        if points.system != A:
            return SolutionTuple(A, points.points)
        return points
    return SolutionTuple(A, points)


def is_generic(A, points):
    """Return True iff ``points`` is a generic solution of ``A``.

    For balanced systems the decision is made twice, by comparing the affine
    dimension with ``k - rank - 1`` and by testing that every balanced
    relation lies in the rowspace; the two must agree.

    Raises
    ------
    InternalConsistencyError
        If the two tests disagree.

    """
    A = as_system(A)
    t = _as_tuple(A, points)
    if not t.is_solution:
        return False
    by_inclusion = rowspace_contains_all(A.A, t.ann_bal)
    if A.balanced:
        by_dimension = t.affine_dim == A.k - A.rank - 1
        if by_dimension != by_inclusion:
            raise InternalConsistencyError(
                f"Generic tests disagree for {t!r}: dimension {t.affine_dim}, "
                f"inclusion {by_inclusion}."
            )
    return by_inclusion


def is_linearly_generic(A, points):
    """Return True iff every relation of the solution ``points`` is a combination of equations."""
    A = as_system(A)
    t = _as_tuple(A, points)
    if not t.is_solution:
        return False
    relations = linear_annihilator(t.points, A.ctx)
    return len(relations) == A.rank and rowspace_contains_all(A.A, relations)


def classify_tuple(A, points):
    """Classify a tuple against a system.

    Parameters
    ----------
    A : :class:`~balsys.contrib.system.SystemMatrix`
        The system.
    points : sequence or :class:`SolutionTuple`
        ``k`` vectors.

    Returns
    -------
    :class:`TupleFlags`
        ``solution``, ``nontrivial``, ``shape``, ``generic`` and
        ``linearly_generic``.

    Raises
    ------
    DimensionError
        If the tuple length is not ``k``.

    """
    A = as_system(A)
    t = _as_tuple(A, points)
    flags = TupleFlags(
        solution=t.is_solution,
        nontrivial=t.distinct > 1,
        shape=t.distinct == t.k,
        generic=is_generic(A, t),
        linearly_generic=is_linearly_generic(A, t),
    )
    logger.debug(f"{t!r}: {flags}")
    return flags


def preserving_annihilator(A, points):
    """Return True iff no balanced relation of ``points`` breaks a column class of ``A``.

    Breaking a pair is a linear condition, so it suffices to check a basis.
    """
    A = as_system(A)
    t = _as_tuple(A, points)
    return not any(breaks_pair(A, b, j1, j2) for b in t.ann_bal for j1, j2 in A.classes.pairs())


def class_preserving_relations(A, points):
    """Return a basis of the balanced relations of ``points`` that preserve every column class."""
    A = as_system(A)
    t = _as_tuple(A, points)
    M = augmented_matrix(t.points, A.ctx)
    functionals = [pair_functional(A, j1, j2) for j1, j2 in A.classes.pairs()]
    if functionals:
        M = FqMatrix(A.ctx, np.vstack([M.entries, np.array(functionals, dtype=np.int64)]))
    return [v.coords for v in kernel_basis(M)]


def has_class_property(A, points):
    """Return True iff every class-preserving balanced relation of ``points`` is in the rowspace."""
    A = as_system(A)
    return rowspace_contains_all(A.A, class_preserving_relations(A, points))


def annihilator_contained(points, other, ctx=None):
    """Return True iff the balanced relations of ``points`` are relations of ``other``."""
    ctx = getattr(points, "ctx", ctx)
    target = augmented_matrix(_coords(other), ctx)
    for b in ann_bal(_coords(points), ctx):
        if np.any(target.apply(np.asarray(b, dtype=np.int64).reshape(-1, 1))):
            return False
    return True


__all__ = [
    "SetPartition",
    "SolutionTuple",
    "TupleFlags",
    "ann_bal",
    "annihilator_contained",
    "check_pairwise_disjoint",
    "class_preserving_relations",
    "classify_tuple",
    "disjoint",
    "has_class_property",
    "is_generic",
    "is_linearly_generic",
    "linear_annihilator",
    "partition_pattern",
    "preserving_annihilator",
]

# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Balanced linear systems and their classification.

A system is given by its coefficient matrix ``A`` with ``m`` rows and ``k``
columns over F_q; a tuple ``(x_1, ..., x_k)`` of vectors in F_q^n solves it
when ``sum_j a_ij x_j = 0`` for every row ``i``. Column indices are zero-based
throughout the API.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from ..core.algebra import FqMatrix, rank, reduced_rows, rowspace_contains, rref
from ..core.errors import DimensionError
from .errors import DegenerateSystemError

logger = logging.getLogger(__name__)


class SystemMatrix:
    """The coefficient matrix of a linear system with cached classification.

    Parameters
    ----------
    A : :class:`~balsys.core.algebra.FqMatrix`
        The ``m x k`` coefficient matrix, ``m, k >= 1``.

    """

    def __init__(self, A):
        if not isinstance(A, FqMatrix):
            raise TypeError(f"Expected an FqMatrix, got {type(A).__name__}.")
        if A.rows < 1 or A.cols < 1:
            raise DimensionError(f"A system needs m, k >= 1, got shape {A.shape}.")
        self._A = A

    @classmethod
    def from_signed(cls, ctx, rows):
        """Build a system from signed integer coefficients reduced mod p."""
        return cls(FqMatrix.from_signed(ctx, rows))

    @property
    def A(self):
        """:class:`~balsys.core.algebra.FqMatrix`: The coefficient matrix."""
        return self._A

    @property
    def ctx(self):
        """:class:`~balsys.core.field.FieldCtx`: The field."""
        return self._A.ctx

    @property
    def m(self):
        """int: Number of equations."""
        return self._A.rows

    @property
    def k(self):
        """int: Number of variables."""
        return self._A.cols

    @cached_property
    def rank(self):
        """int: The rank of the coefficient matrix."""
        return rank(self._A)

    @cached_property
    def classes(self):
        """:class:`ColumnClasses`: The column equivalence classes."""
        return column_classes(self)

    @cached_property
    def profile(self):
        """:class:`SystemProfile`: The full classification."""
        return validate(self)

    @cached_property
    def zero_columns(self):
        """tuple: Indices of zero columns."""
        return tuple(j for j in range(self.k) if not np.any(self._A.entries[:, j]))

    @cached_property
    def balanced(self):
        """bool: Whether every row sums to zero."""
        sums = self.ctx.combine(np.ones(self.k, dtype=np.int64), self._A.entries.T)
        return not np.any(sums)

    def stripped(self):
        """Return the system without zero columns and redundant rows.

        Returns
        -------
        tuple
            ``(system, columns)`` where ``columns`` lists the kept original
            column indices.

        Raises
        ------
        DegenerateSystemError
            If every column is zero.

        """
        columns = tuple(j for j in range(self.k) if j not in self.zero_columns)
        if not columns:
            raise DegenerateSystemError("Every column of the system is zero.")
        sub = self._A.submatrix(columns)
        return SystemMatrix(reduced_rows(sub)), columns

    def apply(self, points):
        """Return ``A`` applied columnwise to a tuple of points (an ``m x n`` array)."""
        return self._A.apply(np.asarray([tuple(p) for p in points], dtype=np.int64))

    def is_solution(self, points):
        """Return True iff the tuple of points solves the system."""
        return not np.any(self.apply(points))

    def rowspace_contains(self, b):
        """Return True iff ``b`` is a linear combination of the equations."""
        return rowspace_contains(self._A, b)

    def __eq__(self, other):
        if not isinstance(other, SystemMatrix):
            return NotImplemented
        return self._A == other._A

    def __hash__(self):
        return hash(self._A)

    def __repr__(self):
        return f"SystemMatrix(q={self.ctx.label}, {self._A.tolist()})"


def as_system(A):
    """Return ``A`` as a :class:`SystemMatrix`."""
    return A if isinstance(A, SystemMatrix) else SystemMatrix(A)


class ColumnClass(NamedTuple):
    """One column equivalence class.

    ``column_j = scalars[i] * representative`` for ``j = members[i]``; the
    representative is the column of the smallest member scaled so that its
    first nonzero entry is 1.
    """

    members: tuple
    representative: tuple
    scalars: tuple
    sums_to_zero: bool
    degenerate: bool

    @property
    def size(self):
        """int: Number of members."""
        return len(self.members)

    def scalar_of(self, j):
        """Return the scalar of member ``j``."""
        return self.scalars[self.members.index(j)]


class ColumnClasses:
    """Partition of the columns of a system into equivalence classes.

    Classes are ordered by their smallest member. Zero columns each form a
    degenerate singleton class that is excluded from :attr:`count`.
    """

    def __init__(self, classes):
        self._classes = tuple(classes)
        self._index = {j: c for c in self._classes for j in c.members}

    def __iter__(self):
        return iter(self._classes)

    def __len__(self):
        return len(self._classes)

    def __getitem__(self, i):
        return self._classes[i]

    @property
    def proper(self):
        """tuple: The non-degenerate classes."""
        return tuple(c for c in self._classes if not c.degenerate)

    @property
    def count(self):
        """int: Number of non-degenerate classes (often written l)."""
        return len(self.proper)

    @property
    def singletons(self):
        """tuple: Non-degenerate classes of size 1."""
        return tuple(c for c in self.proper if c.size == 1)

    def class_of(self, j):
        """Return the class containing column ``j``."""
        return self._index[j]

    def same_class(self, j1, j2):
        """Return True iff ``j1`` and ``j2`` are equivalent non-zero columns."""
        c = self._index[j1]
        return not c.degenerate and j2 in c.members

    def scalars(self, j1, j2):
        """Return ``(alpha, beta)`` with ``column_j1 = alpha v`` and ``column_j2 = beta v``.

        Raises
        ------
        ValueError
            If the columns are not in the same class.

        """
        if j1 == j2 or not self.same_class(j1, j2):
            raise ValueError(f"Columns {j1} and {j2} are not distinct equivalent columns.")
        c = self._index[j1]
        return c.scalar_of(j1), c.scalar_of(j2)

    def pairs(self):
        """Return all within-class pairs ``(j1, j2)``, ``j1 < j2``, in lexicographic order."""
        out = []
        for c in self.proper:
            for a, j1 in enumerate(c.members):
                for j2 in c.members[a + 1 :]:
                    out.append((j1, j2))
        return sorted(out)

    def as_lists(self):
        """Return the classes as lists of members."""
        return [list(c.members) for c in self._classes]


def column_classes(A):
    """Partition the columns of ``A`` into equivalence classes.

    Two columns share a class iff they are nonzero scalar multiples of one
    another.

    Parameters
    ----------
    A : :class:`SystemMatrix` or :class:`~balsys.core.algebra.FqMatrix`
        The system.

    Returns
    -------
    :class:`ColumnClasses`
        The classes, ordered by smallest member.

    """
    M = A.A if isinstance(A, SystemMatrix) else A
    ctx = M.ctx
    groups = {}
    order = []
    for j in range(M.cols):
        col = M.entries[:, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            order.append(("zero", j))
            continue
        alpha = int(col[nz[0]])
        key = tuple(int(a) for a in ctx.mul(ctx.inv(alpha), col))
        if key not in groups:
            groups[key] = []
            order.append(("class", key))
        groups[key].append((j, alpha))
    classes = []
    for kind, item in order:
        if kind == "zero":
            zero = tuple([0] * M.rows)
            classes.append(ColumnClass((item,), zero, (0,), True, True))
            continue
        members = groups[item]
        total = 0
        for _, alpha in members:
            total = ctx.add(total, alpha)
        classes.append(
            ColumnClass(
                tuple(j for j, _ in members),
                item,
                tuple(a for _, a in members),
                total == 0,
                False,
            )
        )
    return ColumnClasses(classes)


def breaks_pair(A, b, j1, j2):
    """Return True iff appending ``b`` to the system separates columns ``j1`` and ``j2``.

    With ``column_j1 = alpha v`` and ``column_j2 = beta v`` this is the case
    iff ``beta * b[j1] - alpha * b[j2] != 0``.

    Raises
    ------
    ValueError
        If ``j1`` and ``j2`` are not distinct equivalent columns.

    """
    A = as_system(A)
    ctx = A.ctx
    alpha, beta = A.classes.scalars(j1, j2)
    value = ctx.sub(ctx.mul(beta, int(b[j1])), ctx.mul(alpha, int(b[j2])))
    return value != 0


def breaks_pair_by_appending(A, b, j1, j2):
    """Decide :func:`breaks_pair` by appending ``b`` and recomputing the classes."""
    A = as_system(A)
    A.classes.scalars(j1, j2)
    extended = column_classes(A.A.append_row(b))
    return not extended.same_class(j1, j2)


def pair_functional(A, j1, j2):
    """Return ``f`` with ``f . b = beta * b[j1] - alpha * b[j2]``."""
    A = as_system(A)
    ctx = A.ctx
    alpha, beta = A.classes.scalars(j1, j2)
    f = np.zeros(A.k, dtype=np.int64)
    f[j1] = beta
    f[j2] = ctx.neg(alpha)
    return f


def preserves_classes(A, b):
    """Return True iff appending ``b`` keeps every column equivalence class intact."""
    A = as_system(A)
    if len(b) != A.k:
        raise DimensionError(f"Row of length {len(b)} for {A.k} columns.")
    return not any(breaks_pair(A, b, j1, j2) for j1, j2 in A.classes.pairs())


def is_type_rc(A):
    """Return True iff ``A`` is balanced with at most one singleton class."""
    A = as_system(A)
    return A.balanced and len(A.classes.singletons) <= 1


class Block(NamedTuple):
    """An irreducible block: original column indices and the induced subsystem."""

    columns: tuple
    system: SystemMatrix


def decompose_irreducible(A):
    """Split a non-degenerate system into irreducible blocks.

    The blocks are the connected components of the support graph of the
    rows of the reduced echelon form, where two columns are adjacent iff
    some row is nonzero at both.

    Returns
    -------
    list[:class:`Block`]
        Blocks ordered by smallest column.

    Raises
    ------
    DegenerateSystemError
        If the system has dependent rows or zero columns.

    """
    A = as_system(A)
    if A.zero_columns or A.rank != A.m:
        raise DegenerateSystemError(
            "Decomposition needs independent rows and no zero columns; use stripped()."
        )
    R = rref(A.A).rref.entries
    parent = list(range(A.k))

    def find(j):
        while parent[j] != j:
            parent[j] = parent[parent[j]]
            j = parent[j]
        return j

    for row in R:
        support = np.flatnonzero(row)
        for j in support[1:]:
            a, b = find(int(support[0])), find(int(j))
            if a != b:
                parent[max(a, b)] = min(a, b)
    components = {}
    for j in range(A.k):
        components.setdefault(find(j), []).append(j)
    blocks = []
    for columns in sorted(components.values()):
        sub = R[:, columns]
        rows = [r for r in range(R.shape[0]) if np.any(sub[r])]
        blocks.append(Block(tuple(columns), SystemMatrix(FqMatrix(A.ctx, sub[rows, :]))))
    return blocks


@dataclass(frozen=True)
class TheoremFlags:
    """Which constructions apply, derived from the column classes and the rank.

    Attributes
    ----------
    situation : bool
        Balanced, type (RC), non-degenerate and irreducible.
    shape_nonzero_sum : bool
        Type (RC) and no class of size 2 sums to zero; shapes via replacement.
    shape_zero_sum : bool
        Type (RC), every class sums to zero and ``k >= 3``.
    generic_rank_gap : bool
        Type (RC), no class sums to zero and ``l = m + 1``.
    generic_zero_sum : bool
        Type (RC) and every class sums to zero.
    base_rank_gap : bool
        ``l = m + 1``.
    base_zero_sum : bool
        Every class sums to zero.

    """

    situation: bool
    shape_nonzero_sum: bool
    shape_zero_sum: bool
    generic_rank_gap: bool
    generic_zero_sum: bool
    base_rank_gap: bool
    base_zero_sum: bool

    @property
    def moderate(self):
        """bool: Some shape construction applies."""
        return self.shape_nonzero_sum or self.shape_zero_sum

    @property
    def temperate(self):
        """bool: Some generic construction applies."""
        return self.generic_rank_gap or self.generic_zero_sum

    def shape_clauses(self):
        """Return the names of the applicable shape clauses."""
        return [
            name
            for name, flag in (
                ("nonzero_sum", self.shape_nonzero_sum),
                ("zero_sum", self.shape_zero_sum),
            )
            if flag
        ]

    def generic_clauses(self):
        """Return the names of the applicable generic clauses."""
        return [
            name
            for name, flag in (
                ("rank_gap", self.generic_rank_gap),
                ("zero_sum", self.generic_zero_sum),
            )
            if flag
        ]

    def _as_dict(self):
        return {
            "situation": self.situation,
            "shape_clauses": self.shape_clauses(),
            "generic_clauses": self.generic_clauses(),
            "base_rank_gap": self.base_rank_gap,
            "base_zero_sum": self.base_zero_sum,
        }


def classify_theorems(A):
    """Return the :class:`TheoremFlags` of a system.

    Zero columns and redundant rows are removed first. For reducible systems
    the flags describe the whole system; per-block flags are part of
    :class:`SystemProfile`.
    """
    A = as_system(A)
    if len(A.zero_columns) == A.k:
        logger.warning("Every column of the system is zero; no construction applies.")
        return _NO_FLAGS
    S, _ = A.stripped()
    classes = S.classes
    rc = is_type_rc(S)
    size2_zero = any(c.sums_to_zero for c in classes.proper if c.size == 2)
    all_zero = all(c.sums_to_zero for c in classes.proper)
    none_zero = not any(c.sums_to_zero for c in classes.proper)
    gap = classes.count == S.rank + 1
    irreducible = len(decompose_irreducible(S)) == 1
    return TheoremFlags(
        situation=rc and irreducible,
        shape_nonzero_sum=rc and not size2_zero,
        shape_zero_sum=rc and all_zero and S.k >= 3,
        generic_rank_gap=rc and none_zero and gap,
        generic_zero_sum=rc and all_zero,
        base_rank_gap=gap,
        base_zero_sum=all_zero,
    )


_NO_FLAGS = TheoremFlags(*([False] * 7))


@dataclass(frozen=True)
class BlockProfile:
    """Classification of one irreducible block."""

    columns: tuple
    k: int
    rank: int
    num_classes: int
    type_rc: bool
    flags: TheoremFlags

    def _as_dict(self):
        return {
            "columns": list(self.columns),
            "k": self.k,
            "rank": self.rank,
            "num_classes": self.num_classes,
            "type_rc": self.type_rc,
            "flags": self.flags._as_dict(),
        }


@dataclass(frozen=True)
class SystemProfile:
    """Full classification of a system."""

    m: int
    k: int
    rank: int
    balanced: bool
    nondegenerate: bool
    zero_columns: tuple
    num_classes: int
    type_rc: bool
    irreducible: bool
    classes: ColumnClasses = field(compare=False)
    blocks: tuple = field(compare=False)
    flags: TheoremFlags = None

    @property
    def verdict(self):
        """dict: ``moderate``/``temperate`` as ``"yes"`` or ``"unknown"``.

        A system is moderate (temperate) when a construction applies to every
        irreducible block.
        """
        moderate = bool(self.blocks) and all(b.flags.moderate for b in self.blocks)
        temperate = bool(self.blocks) and all(b.flags.temperate for b in self.blocks)
        return {
            "moderate": "yes" if moderate else "unknown",
            "temperate": "yes" if temperate else "unknown",
        }

    def _as_dict(self):
        return {
            "m": self.m,
            "k": self.k,
            "rank": self.rank,
            "balanced": self.balanced,
            "nondegenerate": self.nondegenerate,
            "zero_columns": list(self.zero_columns),
            "num_classes": self.num_classes,
            "classes": [
                {"members": list(c.members), "sums_to_zero": c.sums_to_zero}
                for c in self.classes.proper
            ],
            "type_rc": self.type_rc,
            "irreducible": self.irreducible,
            "flags": self.flags._as_dict(),
            "blocks": [b._as_dict() for b in self.blocks],
            "verdict": self.verdict,
        }


def validate(A):
    """Classify a system.

    Parameters
    ----------
    A : :class:`SystemMatrix` or :class:`~balsys.core.algebra.FqMatrix`
        The system.

    Returns
    -------
    :class:`SystemProfile`
        Balancedness, non-degeneracy, rank, classes, type (RC), the
        irreducible blocks of the system without zero columns, and the
        applicable constructions for the whole system and for each block.

    """
    A = as_system(A)
    blocks = []
    if len(A.zero_columns) == A.k:
        pieces = []
    else:
        S, columns = A.stripped()
        pieces = decompose_irreducible(S)
    for block in pieces:
        original = tuple(columns[j] for j in block.columns)
        blocks.append(
            BlockProfile(
                columns=original,
                k=block.system.k,
                rank=block.system.rank,
                num_classes=block.system.classes.count,
                type_rc=is_type_rc(block.system),
                flags=classify_theorems(block.system),
            )
        )
    profile = SystemProfile(
        m=A.m,
        k=A.k,
        rank=A.rank,
        balanced=A.balanced,
        nondegenerate=A.rank == A.m and not A.zero_columns,
        zero_columns=A.zero_columns,
        num_classes=A.classes.count,
        type_rc=is_type_rc(A),
        irreducible=len(blocks) == 1,
        classes=A.classes,
        blocks=tuple(blocks),
        flags=classify_theorems(A),
    )
    logger.debug(f"Profile of {A!r}: {profile._as_dict()}")
    return profile


__all__ = [
    "Block",
    "BlockProfile",
    "ColumnClass",
    "ColumnClasses",
    "SystemMatrix",
    "SystemProfile",
    "TheoremFlags",
    "as_system",
    "breaks_pair",
    "breaks_pair_by_appending",
    "classify_theorems",
    "column_classes",
    "decompose_irreducible",
    "is_type_rc",
    "pair_functional",
    "preserves_classes",
    "validate",
]

# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Plain-text files for systems and point sets.

A matrix file starts with the header ``q m k`` and continues with ``m``
rows of ``k`` field elements. A point-set file starts with ``q n`` and
lists one point of ``n`` elements per line. The order ``q`` is written as
``p`` or ``p^s``, elements are canonical encodings in ``[0, q)``, tokens
are separated by whitespace and ``#`` starts a comment.
"""

import logging

from ..core.algebra import FqMatrix
from ..core.errors import FieldError
from ..core.field import parse_order
from .errors import FormatError
from .pointset import PointSet
from .system import SystemMatrix

logger = logging.getLogger(__name__)


def _lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _header(lines, filename, names):
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise FormatError(filename, None, "The file is empty.")
    if len(tokens) != len(names):
        raise FormatError(filename, lineno, f"Expected the header '{' '.join(names)}'.")
    try:
        ctx = parse_order(tokens[0])
    except FieldError as error:
        raise FormatError(filename, lineno, str(error))
    sizes = []
    for name, token in zip(names[1:], tokens[1:]):
        try:
            value = int(token)
        except ValueError:
            raise FormatError(filename, lineno, f"'{token}' is not a valid {name}.")
        if value < 0:
            raise FormatError(filename, lineno, f"{name} must be non-negative, got {value}.")
        sizes.append(value)
    return ctx, sizes


def _row(ctx, tokens, length, filename, lineno):
    if len(tokens) != length:
        raise FormatError(filename, lineno, f"Expected {length} entries, got {len(tokens)}.")
    try:
        row = [int(t) for t in tokens]
    except ValueError:
        raise FormatError(filename, lineno, f"Non-integer entry in {' '.join(tokens)}.")
    bad = [c for c in row if not 0 <= c < ctx.q]
    if bad:
        raise FormatError(filename, lineno, f"Entry {bad[0]} is not an element of F_{ctx.label}.")
    return row


def parse_matrix(text, filename="<string>"):
    """Parse the contents of a matrix file.

    Returns
    -------
    :class:`~balsys.contrib.system.SystemMatrix`
        The system.

    Raises
    ------
    FormatError
        On a malformed header, a bad entry or a wrong number of rows.

    """
    lines = _lines(text)
    ctx, (m, k) = _header(lines, filename, ("q", "m", "k"))
    if m < 1 or k < 1:
        raise FormatError(filename, 1, f"A system needs m, k >= 1, got m={m} and k={k}.")
    rows = []
    for lineno, tokens in lines:
        if len(rows) == m:
            raise FormatError(filename, lineno, f"More than the {m} announced rows.")
        rows.append(_row(ctx, tokens, k, filename, lineno))
    if len(rows) != m:
        raise FormatError(filename, None, f"Expected {m} rows, found {len(rows)}.")
    logger.debug(f"Parsed a {m} x {k} system over F_{ctx.label} from {filename}.")
    return SystemMatrix(FqMatrix(ctx, rows))


def parse_pointset(text, filename="<string>"):
    """Parse the contents of a point-set file.

    Raises
    ------
    FormatError
        On a malformed header, a bad entry or a repeated point.

    """
    lines = _lines(text)
    ctx, (n,) = _header(lines, filename, ("q", "n"))
    if n < 1:
        raise FormatError(filename, 1, "The dimension must be at least 1.")
    points, seen = [], {}
    for lineno, tokens in lines:
        point = tuple(_row(ctx, tokens, n, filename, lineno))
        if point in seen:
            raise FormatError(filename, lineno, f"Point {point} repeats line {seen[point]}.")
        seen[point] = lineno
        points.append(point)
    logger.debug(f"Parsed {len(points)} points of F_{ctx.label}^{n} from {filename}.")
    return PointSet(ctx, n, points)


def read_matrix(filename):
    """Read a matrix file."""
    with open(filename) as file:
        return parse_matrix(file.read(), str(filename))


def read_pointset(filename):
    """Read a point-set file."""
    with open(filename) as file:
        return parse_pointset(file.read(), str(filename))


def format_matrix(A):
    """Return the matrix file contents of a system."""
    lines = [f"{A.ctx.label} {A.m} {A.k}"]
    lines.extend(" ".join(str(c) for c in row) for row in A.A.tolist())
    return "\n".join(lines) + "\n"


def format_pointset(S):
    """Return the point-set file contents of a point set."""
    lines = [f"{S.ctx.label} {S.n}"]
    lines.extend(" ".join(str(c) for c in p) for p in S)
    return "\n".join(lines) + "\n"


def write_matrix(A, filename):
    """Write a system to a matrix file."""
    with open(filename, "w") as file:
        file.write(format_matrix(A))


def write_pointset(S, filename):
    """Write a point set to a point-set file."""
    with open(filename, "w") as file:
        file.write(format_pointset(S))


__all__ = [
    "format_matrix",
    "format_pointset",
    "parse_matrix",
    "parse_pointset",
    "read_matrix",
    "read_pointset",
    "write_matrix",
    "write_pointset",
]

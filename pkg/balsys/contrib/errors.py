# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Errors raised by balsys.contrib classes."""

from ..core.errors import Error


class DegenerateSystemError(Error, ValueError):
    """The system has dependent rows or unused variables where this is not allowed."""

    pass


class NotApplicableError(Error, ValueError):
    """The system does not satisfy the hypotheses of the requested construction.

    Parameters
    ----------
    reason : str
        Human readable description of the missing hypothesis.

    """

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class BelowThresholdError(Error, ValueError):
    """The point set is smaller than the size that guarantees success.

    Parameters
    ----------
    kind : str
        The threshold kind that was checked.
    required : int
        The guaranteed-success size.
    actual : int
        The size of the supplied point set.

    """

    def __init__(self, kind, required, actual):
        super().__init__(kind, required, actual)
        self.kind = kind
        self.required = required
        self.actual = actual

    def __str__(self):
        return (
            f"Point set of size {self.actual} is below the '{self.kind}' "
            f"threshold {self.required}; pass an override to search anyway."
        )


class BudgetExceededError(Error, RuntimeError):
    """The search budget was exhausted before the search completed.

    Parameters
    ----------
    evaluations : int
        The number of candidate evaluations performed.

    """

    def __init__(self, evaluations):
        super().__init__(evaluations)
        self.evaluations = evaluations

    def __str__(self):
        return f"Search budget exceeded after {self.evaluations} evaluations."


class NotFoundError(Error, LookupError):
    """A search finished without finding a witness.

    Below the guarantee thresholds this is a legal outcome.
    """

    pass


class DegenerateListError(Error, ValueError):
    """A list of solutions repeats a coordinate or is not pairwise disjoint."""

    pass


class FormatError(Error, ValueError):
    """A matrix or point-set file could not be parsed.

    Parameters
    ----------
    filename : str
        The offending file (or ``"<string>"``).
    lineno : int
        One-based line number of the error, or None.
    message : str
        Description of the problem.

    """

    def __init__(self, filename, lineno, message):
        super().__init__(filename, lineno, message)
        self.filename = filename
        self.lineno = lineno
        self.message = message

    def __str__(self):
        where = self.filename if self.lineno is None else f"{self.filename}:{self.lineno}"
        return f"{where}: {self.message}"


class UnknownSystemError(Error, KeyError):
    """The requested catalog system does not exist."""

    def __str__(self):
        return f"Unknown catalog system '{self.args[0]}'."

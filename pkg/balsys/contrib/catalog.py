# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Named example systems and their expected classification.

Coefficients are written as signed integers and reduced into the prime
subfield when a system is generated, so one definition serves every
characteristic. The expectations are derived from the structure of each
family (which columns are proportional and what the classes sum to), not by
running the classifier.
"""

import logging
from typing import Callable, NamedTuple

from ..core.field import FieldCtx, parse_order
from .errors import NotApplicableError, UnknownSystemError
from .system import SystemMatrix

logger = logging.getLogger(__name__)


class ExpectedProfile(NamedTuple):
    """Classification a catalog system is known to have."""

    type_rc: bool
    shape_clauses: list
    generic_clauses: list
    moderate: str
    temperate: str
    note: str = ""

    def _as_dict(self):
        return self._asdict()


class CatalogEntry(NamedTuple):
    """A family of example systems.

    Attributes
    ----------
    name : str
        Lookup key.
    title : str
        Short description.
    defaults : dict
        Default parameters of the generator.
    min_p : int
        Smallest supported characteristic.
    rows : callable
        ``rows(**params)`` returns the signed coefficient rows.
    expect : callable
        ``expect(p, **params)`` returns the :class:`ExpectedProfile`.

    """

    name: str
    title: str
    defaults: dict
    min_p: int
    rows: Callable
    expect: Callable

    def _as_dict(self):
        return {
            "name": self.name,
            "title": self.title,
            "defaults": {k: list(v) if isinstance(v, tuple) else v for k, v in self.defaults.items()},
            "min_p": self.min_p,
        }


def _mod(a, p):
    return a % p


def _verdicts(shape, generic, note=""):
    return ExpectedProfile(
        type_rc=True,
        shape_clauses=shape,
        generic_clauses=generic,
        moderate="yes" if shape else "unknown",
        temperate="yes" if generic else "unknown",
        note=note,
    )


def _single_class_zero_sum():
    # One class holding every column: it sums to zero and has size >= 3.
    return _verdicts(["nonzero_sum", "zero_sum"], ["zero_sum"])


def _star_rows(k=2):
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}.")
    rows = []
    for i in range(k):
        row = [0] * (2 * k + 1)
        row[2 * i] = row[2 * i + 1] = 1
        row[-1] = -2
        rows.append(row)
    return rows


def _fan_rows(k=2):
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}.")
    rows = []
    for i in range(k):
        row = [0] * (2 * k + 1)
        row[2 * i] = 1
        row[2 * i + 1] = -2
        row[-1] = 1
        rows.append(row)
    return rows


def _star_expect(p, k=2):
    if k == 1:
        return _single_class_zero_sum()
    return _verdicts(["nonzero_sum"], ["rank_gap"])


def _w_rows():
    return [[1, -1, -1, 1, 0], [1, 0, -2, 0, 1]]


def _w_expect(p):
    return ExpectedProfile(
        type_rc=False,
        shape_clauses=[],
        generic_clauses=[],
        moderate="yes",
        temperate="yes",
        note="three singleton classes; shapes and generic solutions via the dedicated W construction",
    )


def _t_rows():
    return [[1, -2, 1, 0, 0], [0, 0, -2, 1, 1]]


def _t_expect(p):
    return _verdicts(["nonzero_sum"], ["rank_gap"])


def _check_coefficients(a, p, name):
    if any(_mod(c, p) == 0 for c in a):
        raise NotApplicableError(f"The coefficients of {name} must be nonzero modulo {p}.")
    if _mod(sum(a), p):
        raise NotApplicableError(f"The coefficients of {name} must sum to zero modulo {p}.")


def _lsk_rows(a=(1, -1, 1, -1), l=2):
    k = len(a) - 2
    if k < 1 or l < 1:
        raise ValueError(f"Need at least three coefficients and l >= 1, got {a} and l={l}.")
    rows = []
    for r in range(l):
        row = list(a[:k]) + [0] * (2 * l)
        row[k + 2 * r] = a[k]
        row[k + 2 * r + 1] = a[k + 1]
        rows.append(row)
    return rows


def _lsk_expect(p, a=(1, -1, 1, -1), l=2):
    _check_coefficients(a, p, "lsk")
    if l == 1:
        return _single_class_zero_sum()
    if _mod(a[-2] + a[-1], p):
        return _verdicts(["nonzero_sum"], ["rank_gap"])
    return _verdicts(["zero_sum"], ["zero_sum"])


def _two_t_rows(a=(1, 1, -2), k=1):
    l = len(a) - k
    if k < 1 or l < 2:
        raise ValueError(f"Need k >= 1 and l >= 2, got k={k} with {len(a)} coefficients.")
    return [list(a[:k]) + list(a[k:]) + [0] * l, list(a[:k]) + [0] * l + list(a[k:])]


def _two_t_expect(p, a=(1, 1, -2), k=1):
    _check_coefficients(a, p, "two_t")
    l = len(a) - k
    if _mod(sum(a[k:]), p):
        return _verdicts(["nonzero_sum"], ["rank_gap"])
    shape = ["nonzero_sum", "zero_sum"] if k != 2 and l != 2 else ["zero_sum"]
    return _verdicts(shape, ["zero_sum"])


def _s3_minus_rows():
    return [
        [1, 1, 1, 1, -4, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 1, 1, -4, 0, 0],
        [1, 1, 0, 0, 0, 1, 0, 0, 1, -4],
    ]


def _s3_minus_expect(p):
    if p == 2:
        return ExpectedProfile(
            type_rc=False,
            shape_clauses=[],
            generic_clauses=[],
            moderate="unknown",
            temperate="unknown",
            note="three singleton classes; two variables are forced to be equal",
        )
    if p == 3:
        return ExpectedProfile(
            type_rc=True,
            shape_clauses=[],
            generic_clauses=[],
            moderate="unknown",
            temperate="unknown",
            note="a class of size 2 sums to zero while others do not",
        )
    return ExpectedProfile(
        type_rc=True,
        shape_clauses=["nonzero_sum"],
        generic_clauses=[],
        moderate="yes",
        temperate="unknown",
        note="five classes for three equations; temperateness is open",
    )


def _s3_rows():
    return [
        [1, 1, 1, 1, -4, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 1, 1, -4, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 1, 1, -4],
    ]


def _s3_expect(p):
    if p == 2:
        return _verdicts(["zero_sum"], ["zero_sum"], note="columns 4, 7 and 10 vanish and are removed")
    return _verdicts(["nonzero_sum"], ["rank_gap"])


def _ap_rows(k=3):
    if k < 3:
        raise ValueError(f"Arithmetic progressions need k >= 3, got {k}.")
    rows = []
    for r in range(k - 2):
        row = [0] * k
        row[r], row[r + 1], row[r + 2] = 1, -2, 1
        rows.append(row)
    return rows


def _ap_expect(p, k=3):
    if k >= 4:
        return ExpectedProfile(False, [], [], "unknown", "unknown", "end columns are singletons")
    return _star_expect(p, k=1)


CATALOG = {
    entry.name: entry
    for entry in (
        CatalogEntry("star", "star of k three-term progressions", {"k": 2}, 3, _star_rows, _star_expect),
        CatalogEntry("fan", "fan of k three-term progressions", {"k": 2}, 3, _fan_rows, _star_expect),
        CatalogEntry("w", "W shape", {}, 3, _w_rows, _w_expect),
        CatalogEntry("t", "T shape", {}, 3, _t_rows, _t_expect),
        CatalogEntry(
            "lsk", "l copies sharing k coefficients", {"a": (1, -1, 1, -1), "l": 2}, 2, _lsk_rows, _lsk_expect
        ),
        CatalogEntry(
            "two_t",
            "two rows sharing k coefficients",
            {"a": (1, 1, -2), "k": 1},
            2,
            _two_t_rows,
            _two_t_expect,
        ),
        CatalogEntry(
            "s3_minus", "three rows of five terms, one shared", {}, 2, _s3_minus_rows, _s3_minus_expect
        ),
        CatalogEntry("s3", "three rows of five terms", {}, 2, _s3_rows, _s3_expect),
        CatalogEntry("ap", "k-term arithmetic progression", {"k": 3}, 3, _ap_rows, _ap_expect),
    )
}

ALIASES = {"3ap": ("ap", {"k": 3}), "s3-": ("s3_minus", {}), "2t": ("two_t", {}), "sstar": ("star", {})}


def _ctx(q):
    if isinstance(q, FieldCtx):
        return q
    return parse_order(q)


def get_entry(name):
    """Return the :class:`CatalogEntry` and alias parameters for a (case-insensitive) name.

    Raises
    ------
    UnknownSystemError
        If there is no such entry.

    """
    key = str(name).strip().lower()
    if key in ALIASES:
        key, params = ALIASES[key]
        return CATALOG[key], dict(params)
    try:
        return CATALOG[key], {}
    except KeyError:
        raise UnknownSystemError(name)


def _params(entry, alias, params):
    merged = dict(entry.defaults)
    merged.update(alias)
    merged.update({k: v for k, v in params.items() if v is not None})
    if "a" in merged:
        merged["a"] = tuple(int(c) for c in merged["a"])
    return merged


def make_system(name, q, **params):
    """Generate a catalog system over F_q.

    Parameters
    ----------
    name : str
        Entry name or alias, e.g. ``"star"`` or ``"3AP"``.
    q : int, str or :class:`~balsys.core.field.FieldCtx`
        The field.
    **params
        Overrides of the entry's default parameters.

    Returns
    -------
    :class:`~balsys.contrib.system.SystemMatrix`
        The system, coefficients reduced into the prime subfield.

    Raises
    ------
    UnknownSystemError
        For an unknown name.
    NotApplicableError
        If the characteristic is below the entry's minimum or the
        coefficients are invalid in this characteristic.

    """
    entry, alias = get_entry(name)
    ctx = _ctx(q)
    if ctx.p < entry.min_p:
        raise NotApplicableError(f"System '{entry.name}' needs characteristic at least {entry.min_p}.")
    merged = _params(entry, alias, params)
    if "a" in merged:
        entry.expect(ctx.p, **merged)
    rows = entry.rows(**merged)
    logger.debug(f"Generated '{entry.name}' over F_{ctx.label} with {merged}.")
    return SystemMatrix.from_signed(ctx, rows)


def expected_profile(name, q, **params):
    """Return the :class:`ExpectedProfile` of a catalog system in the characteristic of ``q``."""
    entry, alias = get_entry(name)
    ctx = _ctx(q)
    if ctx.p < entry.min_p:
        raise NotApplicableError(f"System '{entry.name}' needs characteristic at least {entry.min_p}.")
    return entry.expect(ctx.p, **_params(entry, alias, params))


def list_entries():
    """Return all catalog entries ordered by name."""
    return [CATALOG[name] for name in sorted(CATALOG)]


__all__ = [
    "ALIASES",
    "CATALOG",
    "CatalogEntry",
    "ExpectedProfile",
    "expected_profile",
    "get_entry",
    "list_entries",
    "make_system",
]

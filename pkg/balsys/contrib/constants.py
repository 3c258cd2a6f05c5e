# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Slice-rank constants and the explicit size thresholds of the constructions.

``J(t)`` is the minimum over ``0 < x < 1`` of
``(1 + x + ... + x^(t-1)) / (t * x^((t-1)/3))`` and ``Gamma_q = q * J(q)``
bounds the length of tricoloured sum-free sets in F_q^n by ``Gamma_q^n``.
Every threshold is an exact integer: powers of q are handled with exact
integer roots, and real bounds are rounded up from certified upper values.
The constants are sufficient for the constructions, not optimal.
"""

import logging
import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import brentq
from sympy import factorint, integer_nthroot

from ..core.errors import InternalConsistencyError
from ..core.field import FieldCtx

logger = logging.getLogger(__name__)

BRACKET = (1e-9, 1 - 1e-9)
SCAN_POINTS = 20001
GAMMA_MODES = ("flat", "tower")

# Relative slack applied before rounding real bounds up.
_ROUNDING_SLACK = 1e-12


class CertifiedValue(NamedTuple):
    """A real value together with an enclosing interval ``[lo, hi]``."""

    value: float
    lo: float
    hi: float
    minimizer: float


class GammaValue(NamedTuple):
    """The constant Gamma_q in one of its two modes."""

    q: int
    mode: str
    value: float
    lo: float
    hi: float
    tower_equals_flat: bool = False

    def _as_dict(self):
        return {
            "q": self.q,
            "mode": self.mode,
            "value": self.value,
            "interval": [self.lo, self.hi],
            "tower_equals_flat": self.tower_equals_flat,
        }


def _objective(t, x):
    return P.polyval(x, np.ones(t)) / np.power(x, (t - 1) / 3)


def _slope_numerator(t, x):
    # x * d/dx of the objective, up to the positive factor x^(-(t-1)/3)
    c = (t - 1) / 3
    return P.polyval(x, np.arange(t) - c)


def _derivative(t, x):
    return _slope_numerator(t, x) * np.power(x, -(t - 1) / 3 - 1)


@lru_cache(maxsize=None)
def compute_J(t, tol=1e-10):
    """Compute ``J(t)`` with a certified enclosure.

    The objective is scanned on a dense grid to confirm a single descent
    basin; the minimizer is then the sign change of the derivative, located
    with Brent's method.

    Parameters
    ----------
    t : int
        At least 2.
    tol : float
        Maximal width of the enclosing interval (Default value = 1e-10).

    Returns
    -------
    :class:`CertifiedValue`
        The value, its enclosure and the minimizer.

    Raises
    ------
    ValueError
        If ``t < 2`` or ``tol <= 0``.
    InternalConsistencyError
        If the scan finds more than one descent basin.

    """
    if int(t) != t or t < 2:
        raise ValueError(f"J(t) needs an integer t >= 2, got {t}.")
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}.")
    t = int(t)
    xs = np.linspace(*BRACKET, SCAN_POINTS)
    values = _objective(t, xs)
    steps = np.sign(np.diff(values))
    steps = steps[steps != 0]
    turns = np.count_nonzero((steps[:-1] < 0) & (steps[1:] > 0))
    if turns != 1:
        raise InternalConsistencyError(
            f"The J({t}) objective has {turns} descent basins on {BRACKET}."
        )
    i = int(np.argmin(values))
    a, b = xs[max(i - 1, 0)], xs[min(i + 1, SCAN_POINTS - 1)]
    if not (_slope_numerator(t, a) < 0 < _slope_numerator(t, b)):
        a, b = BRACKET
    xtol, rtol = 1e-15, 4 * np.finfo(float).eps
    x_star = brentq(lambda x: _slope_numerator(t, x), a, b, xtol=xtol, rtol=rtol)
    # brentq stops within xtol + rtol * |x| of the root.
    err = xtol + rtol * abs(x_star)
    f_star = float(_objective(t, x_star))
    slope = max(abs(_derivative(t, x_star - err)), abs(_derivative(t, x_star + err)))
    rounding = 1e-14 * f_star
    lo = (f_star - slope * err - rounding) / t
    hi = (f_star + rounding) / t
    if hi - lo > tol:
        raise InternalConsistencyError(f"Could not certify J({t}) to within {tol}.")
    logger.debug(f"J({t}) = {f_star / t} at x = {x_star}.")
    return CertifiedValue(f_star / t, lo, hi, float(x_star))


def _prime_power(q):
    if isinstance(q, FieldCtx):
        return q.q, q.p, q.s
    q = int(q)
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
        raise ValueError(f"{q} is not a prime power.")
    ((p, s),) = factors.items()
    return q, p, s


@lru_cache(maxsize=None)
def gamma(q, mode="flat", tol=1e-10):
    """Return Gamma_q.

    Parameters
    ----------
    q : int or :class:`~balsys.core.field.FieldCtx`
        The field order.
    mode : str
        ``"flat"`` for ``q * J(q)``; ``"tower"`` for ``(p * J(p))^s``, which
        is smaller for proper prime powers (Default value = "flat").
    tol : float
        Width of the enclosure of J (Default value = 1e-10).

    Returns
    -------
    :class:`GammaValue`
        The constant and a certified enclosure.

    """
    if mode not in GAMMA_MODES:
        raise ValueError(f"Unknown gamma mode '{mode}', expected one of {GAMMA_MODES}.")
    q, p, s = _prime_power(q)
    if mode == "flat" or s == 1:
        J = compute_J(q, tol)
        value = GammaValue(q, mode, q * J.value, q * J.lo, q * J.hi, mode == "tower")
        if mode == "tower":
            logger.info(f"Tower mode for prime q={q} coincides with flat mode.")
        if not value.value < 0.945 * q:
            raise InternalConsistencyError(f"Gamma_{q} = {value.value} is not below 0.945 q.")
        return value
    J = compute_J(p, tol)
    return GammaValue(q, mode, (p * J.value) ** s, (p * J.lo) ** s, (p * J.hi) ** s)


@lru_cache(maxsize=None)
def stirling_partitions(k, lam):
    """Return the number of partitions of a k-element set into ``lam`` parts.

    Raises
    ------
    ValueError
        Unless ``1 <= lam <= k``.

    """
    if not 1 <= lam <= k:
        raise ValueError(f"Need 1 <= lambda <= k, got k={k}, lambda={lam}.")
    if lam == 1 or lam == k:
        return 1
    return lam * stirling_partitions(k - 1, lam) + stirling_partitions(k - 1, lam - 1)


def beta(k, lam, start=1):
    """Return the shape-growing constant after ``lam`` rounds.

    ``beta_1 = start`` and ``beta_(l+1) = beta_l + P(k, l) * k``.
    """
    if not 1 <= lam <= k:
        raise ValueError(f"Need 1 <= lambda <= k, got k={k}, lambda={lam}.")
    value = start
    for level in range(1, lam):
        value += stirling_partitions(k, level) * k
    return value


def _ceil_upper(x):
    return math.ceil(x * (1 + _ROUNDING_SLACK))


def pigeonhole(q, k, n):
    """Return ``ceil(q^(1 + (1 - 1/k) n))`` exactly."""
    root, exact = integer_nthroot(q ** (k + (k - 1) * n), k)
    return int(root) if exact else int(root) + 1


def replacement_length(q, n, t=1, mode="flat"):
    """Return ``ceil(4 t Gamma_q^n)``, a list length that guarantees ``t`` recombinations."""
    return _ceil_upper(4 * t * gamma(q, mode).hi ** n)


def breaking_length(q, k, n, mode="flat"):
    """Return ``ceil(4 q^k Gamma_q^n)``, a list length that guarantees a pair elimination."""
    return _ceil_upper(4 * q ** k * gamma(q, mode).hi ** n)


def shape_threshold(q, k, n, mode="flat"):
    """Return ``ceil(beta_k Gamma_q^n)`` for growing shapes from constant tuples."""
    return _ceil_upper(beta(k, k) * gamma(q, mode).hi ** n)


def shape_zero_sum_threshold(q, k, n, mode="flat"):
    """Return the growing threshold when the start tuples come from pigeonhole pairs."""
    base = max(gamma(q, mode).hi, q ** ((k - 1) / k))
    return _ceil_upper(beta(k, k, start=q) * base ** n)


def rank_threshold(q, k, n, t, mode="flat"):
    """Return ``ceil(t * 4 k q^k Gamma_q^n)`` for eliminating ``t`` pairs."""
    return _ceil_upper(t * 4 * k * q ** k * gamma(q, mode).hi ** n)


def temperate_threshold(q, k, ell, n, t, mode="flat"):
    """Return ``ceil(q^(1 + (l-1)/l n)) + ceil(t * 4 k q^k Gamma_q^n)``."""
    return pigeonhole(q, ell, n) + rank_threshold(q, k, n, t, mode)


def w_shape_threshold(q, n, mode="flat"):
    """Return ``ceil(4 Gamma_q^n)`` for the dedicated W construction."""
    return _ceil_upper(4 * gamma(q, mode).hi ** n)


THRESHOLD_KINDS = (
    "pigeonhole",
    "beta",
    "shape",
    "shape_zero_sum",
    "temperate",
    "rank",
    "replacement",
    "breaking",
    "w_shape",
)


def thresholds(system, n, kind, t=None, lam=None, mode="flat"):
    """Return the threshold of the given kind for a system.

    Parameters
    ----------
    system : :class:`~balsys.contrib.system.SystemMatrix`
        Supplies q, k and the number of classes l.
    n : int
        Dimension of the ambient space F_q^n.
    kind : str
        One of :data:`THRESHOLD_KINDS`.
    t : int
        Number of pairs (``temperate``, ``rank``) or of recombinations
        (``replacement``). Defaults to the number of within-class pairs for
        pair kinds and 1 for ``replacement``.
    lam : int
        Round for ``beta`` (Default value = k).
    mode : str
        Gamma mode (Default value = "flat").

    Raises
    ------
    ValueError
        For an unknown kind.

    """
    q, k = system.ctx.q, system.k
    ell = system.classes.count
    pairs = len(system.classes.pairs())
    if kind == "pigeonhole":
        return pigeonhole(q, k, n)
    if kind == "beta":
        return beta(k, k if lam is None else lam)
    if kind == "shape":
        return shape_threshold(q, k, n, mode)
    if kind == "shape_zero_sum":
        return shape_zero_sum_threshold(q, k, n, mode)
    if kind == "temperate":
        return temperate_threshold(q, k, ell, n, pairs if t is None else t, mode)
    if kind == "rank":
        return rank_threshold(q, k, n, pairs if t is None else t, mode)
    if kind == "replacement":
        return replacement_length(q, n, 1 if t is None else t, mode)
    if kind == "breaking":
        return breaking_length(q, k, n, mode)
    if kind == "w_shape":
        return w_shape_threshold(q, n, mode)
    raise ValueError(f"Unknown threshold kind '{kind}', expected one of {THRESHOLD_KINDS}.")


__all__ = [
    "CertifiedValue",
    "GammaValue",
    "THRESHOLD_KINDS",
    "beta",
    "breaking_length",
    "compute_J",
    "gamma",
    "pigeonhole",
    "rank_threshold",
    "replacement_length",
    "shape_threshold",
    "shape_zero_sum_threshold",
    "stirling_partitions",
    "temperate_threshold",
    "thresholds",
    "w_shape_threshold",
]

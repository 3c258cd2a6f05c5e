# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Exact arithmetic in finite fields F_q, q = p^s, and vectors over them.

Elements are encoded as integers in ``[0, q)``. For ``s > 1`` the base-p
digits of an encoding are the coefficients of a polynomial in ``x`` (lowest
degree first), reduced modulo a fixed monic primitive polynomial of degree
``s``. The polynomial is the one whose non-leading coefficients, read as a
base-p integer with the constant term as the least significant digit, form
the smallest number among all primitive polynomials of that degree. For
example::

    F_4   x^2 + x + 1
    F_8   x^3 + x + 1
    F_9   x^2 + x + 2
    F_16  x^4 + x + 1

Multiplication in extension fields uses discrete log/antilog tables with
respect to ``x``; addition uses Zech logarithms, so every operation is a
constant number of table lookups. All operations accept Python integers or
numpy integer arrays; integer inputs give integer outputs.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from .errors import DimensionError, FieldError

logger = logging.getLogger(__name__)

MAX_ORDER = 2 ** 16


def _digits(a, p, s):
    out = []
    for _ in range(s):
        out.append(a % p)
        a //= p
    return out


def _from_digits(digits, p):
    a = 0
    for d in reversed(digits):
        a = a * p + d
    return a


def _times_x(a, p, s, low):
    """Multiply the encoding ``a`` by x modulo ``x^s + low(x)``."""
    digits = _digits(a, p, s)
    top = digits[-1]
    shifted = [0] + digits[:-1]
    if top:
        shifted = [(d - top * c) % p for d, c in zip(shifted, low)]
    return _from_digits(shifted, p)


@lru_cache(maxsize=None)
def _primitive_modulus(p, s):
    """Return the non-leading coefficients of the fixed primitive polynomial.

    Candidates are tried in the order of their encoding; ``x`` must have
    order ``q - 1`` modulo the first one returned.
    """
    q = p ** s
    cofactors = [(q - 1) // r for r in factorint(q - 1)]
    x = [ZZ(1), ZZ(0)]
    for code in range(1, q):
        low = _digits(code, p, s)
        if low[0] == 0:
            continue
        f = [ZZ(1)] + [ZZ(c) for c in reversed(low)]
        if not gf_irreducible_p(f, p, ZZ):
            continue
        if all(gf_pow_mod(x, e, f, p, ZZ) != [ZZ(1)] for e in cofactors):
            return tuple(low)
    raise FieldError(f"No primitive polynomial of degree {s} over F_{p}.")


def _is_int(*args):
    return all(isinstance(a, (int, np.integer)) for a in args)


class FieldCtx:
    """Arithmetic context for the finite field F_q.

    Use :func:`fq_init` to obtain instances; contexts are immutable and cached,
    so they can be shared freely between threads.

    Parameters
    ----------
    p : int
        Prime characteristic.
    s : int
        Extension degree, at least 1 (Default value = 1).

    Raises
    ------
    FieldError
        If ``p`` is not prime or ``p**s`` is not in ``[2, 2**16]``.

    """

    def __init__(self, p, s=1):
        p, s = int(p), int(s)
        if not isprime(p):
            raise FieldError(f"{p} is not prime.")
        if s < 1:
            raise FieldError(f"Extension degree must be at least 1, got {s}.")
        q = p ** s
        if q > MAX_ORDER:
            raise FieldError(f"Field order {p}^{s} exceeds {MAX_ORDER}.")
        self._p, self._s, self._q = p, s, q
        elements = np.arange(q, dtype=np.int64)
        if s == 1:
            self._low = None
            self._neg = (-elements) % p
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = [pow(int(a), p - 2, p) for a in range(1, q)]
            self._inv = inv
        else:
            self._low = _primitive_modulus(p, s)
            self._build_tables()
        for table in (self._neg, self._inv):
            table.setflags(write=False)
        self._verify()
        logger.debug(f"Initialized {self!r}.")

    def _build_tables(self):
        p, s, q = self._p, self._s, self._q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        a = 1
        for e in range(q - 1):
            exp[e] = a
            log[a] = e
            a = _times_x(a, p, s, self._low)
        # zech[e] = log(1 + x^e), or -1 where 1 + x^e = 0
        d0 = exp % p
        one_plus = exp - d0 + (d0 + 1) % p
        zech = np.where(one_plus == 0, -1, log[one_plus])
        neg = np.array(
            [_from_digits([(-d) % p for d in _digits(a, p, s)], p) for a in range(q)],
            dtype=np.int64,
        )
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        for table in (exp, log, zech):
            table.setflags(write=False)
        self._exp, self._log, self._zech = exp, log, zech
        self._neg, self._inv = neg, inv

    def _verify(self):
        nonzero = np.arange(1, self._q, dtype=np.int64)
        if not np.all(self.mul(nonzero, self._inv[nonzero]) == 1):
            raise FieldError(f"Inverse table check failed for {self!r}.")
        elements = np.arange(self._q, dtype=np.int64)
        if not np.all(self.add(elements, self._neg) == 0):
            raise FieldError(f"Negation table check failed for {self!r}.")
        if self._s > 1 and len(set(self._exp.tolist())) != self._q - 1:
            raise FieldError(f"Antilog table of {self!r} is not a bijection.")

    @property
    def p(self):
        """int: The characteristic."""
        return self._p

    @property
    def s(self):
        """int: The extension degree."""
        return self._s

    @property
    def q(self):
        """int: The field order."""
        return self._q

    @property
    def modulus(self):
        """tuple or None: Coefficients of the modulus, lowest degree first, leading 1 included."""
        if self._low is None:
            return None
        return self._low + (1,)

    @property
    def label(self):
        """str: The order as written in files, ``p`` or ``p^s``."""
        return str(self._p) if self._s == 1 else f"{self._p}^{self._s}"

    def modulus_str(self):
        """Return the modulus polynomial in human readable form."""
        if self._low is None:
            return f"x mod {self._p}"
        terms = []
        for deg, c in reversed(list(enumerate(self.modulus))):
            if c == 0:
                continue
            if deg == 0:
                terms.append(str(c))
            else:
                mono = "x" if deg == 1 else f"x^{deg}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def elements(self):
        """Return all encodings ``0 .. q-1``."""
        return range(self._q)

    def check(self, a):
        """Raise :class:`FieldError` unless ``a`` holds valid encodings."""
        arr = np.asarray(a)
        if arr.size and (arr.min() < 0 or arr.max() >= self._q):
            raise FieldError(f"Invalid element encoding for F_{self.label}: {a!r}.")
        return a

    def from_int(self, c):
        """Embed (signed) integers into the prime subfield."""
        return c % self._p

    def add(self, a, b):
        """Return ``a + b``."""
        if self._s == 1:
            return (a + b) % self._p
        a_, b_ = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        la, lb = self._log[a_], self._log[b_]
        z = self._zech[(lb - la) % (self._q - 1)]
        out = np.where(z < 0, 0, self._exp[(la + np.maximum(z, 0)) % (self._q - 1)])
        out = np.where(a_ == 0, b_, np.where(b_ == 0, a_, out))
        return int(out) if _is_int(a, b) else out

    def neg(self, a):
        """Return ``-a``."""
        if self._s == 1:
            return (-a) % self._p
        out = self._neg[a]
        return int(out) if _is_int(a) else out

    def sub(self, a, b):
        """Return ``a - b``."""
        if self._s == 1:
            return (a - b) % self._p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        """Return ``a * b``."""
        if self._s == 1:
            return (a * b) % self._p
        a_, b_ = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        out = self._exp[(self._log[a_] + self._log[b_]) % (self._q - 1)]
        out = np.where((a_ == 0) | (b_ == 0), 0, out)
        return int(out) if _is_int(a, b) else out

    def inv(self, a):
        """Return the multiplicative inverse of ``a``.

        Raises
        ------
        ZeroDivisionError
            If any input element is zero.

        """
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError(f"Zero has no inverse in F_{self.label}.")
        out = self._inv[a]
        return int(out) if _is_int(a) else out

    def div(self, a, b):
        """Return ``a / b``."""
        return self.mul(a, self.inv(b))

    def combine(self, coeffs, vectors):
        """Return the linear combination ``sum_j coeffs[j] * vectors[j]``.

        Parameters
        ----------
        coeffs : sequence of int
            ``k`` field elements.
        vectors : array-like
            Array with leading axis of length ``k``.

        """
        coeffs = np.asarray(coeffs, dtype=np.int64)
        vectors = np.asarray(vectors, dtype=np.int64)
        if coeffs.shape[0] != vectors.shape[0]:
            raise DimensionError(
                f"{coeffs.shape[0]} coefficients for {vectors.shape[0]} vectors."
            )
        if self._s == 1:
            return np.tensordot(coeffs, vectors, axes=1) % self._p
        out = np.zeros(vectors.shape[1:], dtype=np.int64)
        for c, v in zip(coeffs, vectors):
            if c:
                out = self.add(out, self.mul(int(c), v))
        return out

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self._p, self._s) == (other._p, other._s)

    def __hash__(self):
        return hash((self._p, self._s))

    def __repr__(self):
        if self._s == 1:
            return f"FieldCtx(p={self._p})"
        return f"FieldCtx(p={self._p}, s={self._s}, modulus='{self.modulus_str()}')"


@lru_cache(maxsize=None)
def fq_init(p, s=1):
    """Return the (cached) arithmetic context of F_{p^s}.

    Parameters
    ----------
    p : int
        Prime characteristic.
    s : int
        Extension degree (Default value = 1).

    Returns
    -------
    :class:`FieldCtx`
        The field context.

    Raises
    ------
    FieldError
        For a non-prime ``p`` or an order outside ``[2, 2**16]``.

    """
    return FieldCtx(p, s)


def parse_order(text):
    """Return the field context for an order written as ``p`` or ``p^s``."""
    text = str(text).strip()
    try:
        if "^" in text:
            p, s = (int(t) for t in text.split("^"))
        else:
            p, s = int(text), 1
    except ValueError:
        raise FieldError(f"Cannot parse field order '{text}'.")
    if s == 1 and not isprime(p):
        raise FieldError(f"{p} is not prime; write prime powers as p^s.")
    return fq_init(p, s)


@dataclass(frozen=True)
class FqVector:
    """A vector in F_q^n.

    Vectors behave like read-only sequences of their coordinates.
    """

    ctx: FieldCtx
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        self.ctx.check(self.coords)

    @property
    def n(self):
        """int: The dimension."""
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"FqVector({self.coords}, q={self.ctx.label})"


def point_index(coords, q):
    """Return the base-q index of a coordinate sequence, most significant first."""
    idx = 0
    for c in coords:
        idx = idx * q + int(c)
    return idx


def point_indices(array, q):
    """Return base-q indices for an array whose last axis holds coordinates."""
    array = np.asarray(array)
    n = array.shape[-1]
    if q ** n < 2 ** 62:
        weights = np.array([q ** (n - 1 - i) for i in range(n)], dtype=np.int64)
        return array.astype(np.int64) @ weights
    flat = array.reshape(-1, n)
    return np.array([point_index(row, q) for row in flat], dtype=object).reshape(
        array.shape[:-1]
    )


def vec_index(v):
    """Return the base-q index of an :class:`FqVector`.

    Lexicographic order of coordinates equals numeric order of indices.
    """
    return point_index(v.coords, v.ctx.q)


def vec_from_index(ctx, n, idx):
    """Return the vector of F_q^n with base-q index ``idx``.

    Raises
    ------
    DimensionError
        If ``idx`` is not in ``[0, q**n)``.

    """
    if not 0 <= idx < ctx.q ** n:
        raise DimensionError(f"Index {idx} out of range for F_{ctx.label}^{n}.")
    coords = []
    for _ in range(n):
        coords.append(idx % ctx.q)
        idx //= ctx.q
    return FqVector(ctx, tuple(reversed(coords)))


__all__ = [
    "FieldCtx",
    "FqVector",
    "MAX_ORDER",
    "fq_init",
    "parse_order",
    "point_index",
    "point_indices",
    "vec_index",
    "vec_from_index",
]

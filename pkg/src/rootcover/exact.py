"""Exact arithmetic kernel.

Everything downstream computes with arbitrary-precision rationals; the only
irrational quantities in the whole system (square-root and logarithm bounds)
are compared or enclosed exactly here, so no floating point enters any result.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BadInput, NotCoprime

#: The universal numeric carrier: exact rationals in lowest terms with
#: positive denominator, as provided by the standard library.
Rat = Fraction


def residue(a: int, n: int) -> int:
    """Residue of ``a`` modulo ``n``, normalized to ``[0, n)``."""
    if n < 1:
        raise BadInput(f"modulus must be positive, got {n}")
    return a % n


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n``, in ``[1, n)``.

    Raises :class:`NotCoprime` when ``gcd(a, n) != 1``.
    """
    if n < 2:
        raise BadInput(f"modulus must be >= 2, got {n}")
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotCoprime(f"{a} is not invertible modulo {n}") from None


def sawtooth(x) -> Rat:
    """The sawtooth function ((x)): x - floor(x) - 1/2 off the integers, 0 on them.

    Odd and periodic with period 1.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def leq_sqrt_bound(x, c, m: int, d) -> bool:
    """Decide ``x <= c*sqrt(m) + d`` exactly (no floating point).

    Requires ``c >= 0`` and ``m >= 1``.  True iff ``x <= d``, or ``x > d``
    and ``(x - d)^2 <= c^2 * m``.
    """
    x, c, d = Fraction(x), Fraction(c), Fraction(d)
    if c < 0:
        raise BadInput("coefficient of the square root must be nonnegative")
    if m < 1:
        raise BadInput(f"radicand must be a positive integer, got {m}")
    if x <= d:
        return True
    return (x - d) ** 2 <= c * c * m


def sqrt_upper(m, bits: int = 64) -> Rat:
    """A rational upper bound for sqrt(m), within 2**-bits of the true value."""
    m = Fraction(m)
    if m < 0:
        raise BadInput("radicand must be nonnegative")
    scale = 1 << bits
    num = math.isqrt(math.ceil(m * scale * scale)) + 1
    return Fraction(num, scale)


# Rational enclosure of log.  Used for the Girstmair complement bound, which
# must be checked without trusting floats.

_LN2_TERMS = 96


def _ln2_enclosure() -> tuple[Rat, Rat]:
    # ln 2 = sum_{k>=1} 1/(k 2^k); the tail after K terms is < 1/((K+1) 2^K).
    lo = sum(Fraction(1, k * (1 << k)) for k in range(1, _LN2_TERMS + 1))
    return lo, lo + Fraction(1, (_LN2_TERMS + 1) * (1 << _LN2_TERMS))


_LN2_LO, _LN2_HI = _ln2_enclosure()


def log_enclosure(x, terms: int = 64) -> tuple[Rat, Rat]:
    """Exact rationals ``(lo, hi)`` with ``lo <= log(x) <= hi``.

    Argument reduction by powers of two, then the atanh series
    ``log y = 2 * sum t^(2k+1)/(2k+1)`` with ``t = (y-1)/(y+1)``, whose tail
    is bounded by the next term divided by ``1 - t^2``.
    """
    x = Fraction(x)
    if x <= 0:
        raise BadInput("log requires a positive argument")
    e = 0
    while x >= 2:
        x /= 2
        e += 1
    while x < 1:
        x *= 2
        e -= 1
    t = (x - 1) / (x + 1)  # in [0, 1/3)
    acc = Fraction(0)
    power = t
    tsq = t * t
    for k in range(terms):
        acc += power / (2 * k + 1)
        power *= tsq
    lo_frac = 2 * acc
    tail = 2 * power / ((2 * terms + 1) * (1 - tsq)) if t else Fraction(0)
    if e >= 0:
        return e * _LN2_LO + lo_frac, e * _LN2_HI + lo_frac + tail
    return e * _LN2_HI + lo_frac, e * _LN2_LO + lo_frac + tail

"""Exact evaluation of the Faber--Schauder wedge basis.

The basis on [0, 1] consists of the unit wedge and its dyadic rescalings:

    e00(t)      = max(0, min(t, 1 - t))
    e(m,k)(t)   = 2**(-m/2) * e00(2**m * t - k)

so e(m,k) is a wedge of width 2**-m and height 2**-(m+2)/2 centred at
(k + 1/2) * 2**-m, and wedges of one generation have disjoint supports.
Values at rational t always lie in Q(sqrt(2)) and are returned exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .qfield import Dyadic, QuadValue, Rational, _as_fraction, pow2_half


class BasisIndex(NamedTuple):
    """Generation m >= 0 and translate k (any integer; support may leave [0,1])."""

    m: int
    k: int


def unit_wedge(t: Rational) -> Fraction:
    """The generation-zero wedge e00 at a rational point."""
    t = _as_fraction(t)
    v = min(t, 1 - t)
    return v if v > 0 else Fraction(0)


def eval_e(idx: BasisIndex | tuple[int, int], t: Rational) -> QuadValue:
    """Exact value of the wedge e(m,k) at rational t (zero off its support)."""
    m, k = idx
    if m < 0:
        raise ValueError("generation m must be >= 0")
    u = _as_fraction(t) * (1 << m) - k
    v = min(u, 1 - u)
    if v <= 0:
        return QuadValue(0, 0)
    return pow2_half(-m) * v


def wedge_peak(idx: BasisIndex | tuple[int, int]) -> tuple[Dyadic, QuadValue]:
    """Peak location (2k+1)/2**(m+1) and height 2**-(m+2)/2 of e(m,k)."""
    m, k = idx
    if m < 0:
        raise ValueError("generation m must be >= 0")
    return Dyadic(2 * k + 1, m + 1), pow2_half(-(m + 2))


def eval_f(idx: BasisIndex | tuple[int, int], t: Rational) -> QuadValue:
    """The wedge plus its two children: e(m,k) + e(m+1,2k) + e(m+1,2k+1)."""
    m, k = idx
    return eval_e((m, k), t) + eval_e((m + 1, 2 * k), t) + eval_e((m + 1, 2 * k + 1), t)

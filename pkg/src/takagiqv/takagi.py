"""Generalized Takagi functions: wedge series with +/-1 coefficients.

A :class:`TakagiFunction` is the uniform limit of the partial sums

    x^n(t) = sum_{m<n} sum_{k<2**m} theta(m,k) * e(m,k)(t)

for a coefficient scheme theta.  Wedges of generation m vanish on the
grid j/2**m and every finer statement follows from that: the value at a
dyadic point j/2**N is already exact at truncation level N.

Evaluation surfaces:

* ``partial_sum`` / ``at_dyadic`` -- exact scalar values via Fractions;
* ``grid_pairs`` -- all values on the grid j/2**N at once, as integer
  pairs (p, q) with value (p + q*sqrt(2)) / 2**N, built by the midpoint
  recursion (one numpy pass per generation);
* ``approx`` -- truncated series with a certified geometric tail bound;
* ``thirds_value`` -- closed-form exact values at points with denominator
  3 * 2**n for the three named functions that admit them.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .qfield import Dyadic, QuadValue, Rational, _as_fraction, pow2_half
from .schauder import eval_e
from .schemes import AllPlus, CoefficientScheme, HalfSplit, NegHalfSplit

# Sum of all wedge heights 2**-(m+2)/2: the series tail after M generations
# is bounded by TAIL_SUM * 2**-(M/2) in sup norm.
TAIL_SUM = QuadValue(2, 1)  # 2 + sqrt(2) = 1 / (1 - 2**-1/2)

#: Value of the all-plus function at 1/3 and 2/3 (geometric sum of
#: one wedge value 1/3 per generation, heights 2**-m/2).
THIRDS_PEAK = QuadValue(Fraction(2, 3), Fraction(1, 3))

# int64 is exact for grid values and their squared-increment sums up to
# this level: |p|, |q| <= 2**(level+2) and QV sums stay below 2**(2*level+6).
GRID_LEVEL_CAP = 26

Evaluable = Union["TakagiFunction", Callable[[Fraction], "QuadValue | Rational"]]


def _check_unit_interval(t: Fraction) -> None:
    if not 0 <= t <= 1:
        raise ValueError(f"t={t} outside [0, 1]")


class TakagiFunction:
    """One member of the class, given by its coefficient scheme."""

    def __init__(self, scheme: CoefficientScheme) -> None:
        self.scheme = scheme
        self._rows: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"TakagiFunction({self.scheme.spec})"

    def row(self, m: int) -> np.ndarray:
        """Generation-m coefficients, cached after first use."""
        with self._lock:
            got = self._rows.get(m)
            if got is None:
                got = self._rows[m] = self.scheme.row(m)
            return got

    # -- scalar evaluation ----------------------------------------------------

    def partial_sum(self, n: int, t: Rational) -> QuadValue:
        """Exact value of the n-generation partial sum at rational t."""
        t = _as_fraction(t)
        _check_unit_interval(t)
        acc = QuadValue(0, 0)
        for m in range(n):
            # only the wedge whose support contains t contributes
            k = min(math.floor(t * (1 << m)), (1 << m) - 1)
            term = eval_e((m, k), t)
            if term:
                acc = acc + (term if self.scheme.theta(m, k) > 0 else -term)
        return acc

    def at_dyadic(self, t: Dyadic | Rational) -> QuadValue:
        """Exact value at a dyadic point; generations >= exp(t) all vanish there."""
        if not isinstance(t, Dyadic):
            t = Dyadic.from_fraction(_as_fraction(t))
        _check_unit_interval(t.as_fraction())
        return self.partial_sum(t.exp, t.as_fraction())

    def approx(self, t: Rational, tol: Rational) -> tuple[QuadValue, QuadValue]:
        """Truncated value and a certified bound on the discarded tail.

        Uses the smallest truncation level M whose geometric tail bound
        (2 + sqrt(2)) * 2**-(M+2)/2 is <= tol; the true value differs from
        the returned one by at most that bound.
        """
        t = _as_fraction(t)
        _check_unit_interval(t)
        tol = _as_fraction(tol)
        if tol <= 0:
            raise ValueError("tol must be > 0")
        level = 0
        while True:
            bound = TAIL_SUM * pow2_half(-(level + 2))
            if bound.compare(tol) <= 0:
                return self.partial_sum(level, t), bound
            level += 1

    # -- bulk evaluation on dyadic grids ---------------------------------------

    def grid_pairs(self, level: int) -> tuple[np.ndarray, np.ndarray]:
        """Integer pairs for all grid values: x(j/2**level) = (p_j + q_j*sqrt2)/2**level.

        Built by the midpoint recursion: refining the grid leaves old values
        fixed and sets each new midpoint to the average of its neighbours
        plus theta times the new wedge height.
        """
        if not 0 <= level <= GRID_LEVEL_CAP:
            raise ValueError(f"grid level must be in [0, {GRID_LEVEL_CAP}]")
        p = np.zeros(2, dtype=np.int64)
        q = np.zeros(2, dtype=np.int64)
        for n in range(level):
            theta = self.row(n)
            size = (1 << (n + 1)) + 1
            np_new = np.empty(size, dtype=np.int64)
            nq_new = np.empty(size, dtype=np.int64)
            np_new[::2] = p * 2
            nq_new[::2] = q * 2
            mid_p = p[:-1] + p[1:]
            mid_q = q[:-1] + q[1:]
            # wedge height 2**-(n+2)/2 rescaled by 2**(n+1)
            if n % 2 == 0:
                mid_p += theta * (1 << (n // 2))
            else:
                mid_q += theta * (1 << ((n - 1) // 2))
            np_new[1::2] = mid_p
            nq_new[1::2] = mid_q
            p, q = np_new, nq_new
        return p, q

    def grid_value(self, level: int, j: int) -> QuadValue:
        """Exact value at j/2**level, read off the bulk arrays."""
        p, q = self.grid_pairs(level)
        return pair_value(int(p[j]), int(q[j]), level)


def pair_value(p: int, q: int, level: int) -> QuadValue:
    """(p + q*sqrt(2)) / 2**level as a QuadValue."""
    den = 1 << level
    return QuadValue(Fraction(p, den), Fraction(q, den))


# -- closed-form values at thirds points --------------------------------------


def _thirds_exponent(t: Fraction) -> int:
    """n such that t = a / (3 * 2**n) in lowest terms, or raise."""
    den = t.denominator
    if den % 3 != 0:
        raise ValueError(f"t={t} does not have denominator 3 * 2**n")
    rest = den // 3
    if rest & (rest - 1):
        raise ValueError(f"t={t} does not have denominator 3 * 2**n")
    return rest.bit_length() - 1


def _all_plus_thirds(t: Fraction) -> QuadValue:
    """Exact all-plus value at t = a/(3*2**n) via self-similarity.

    On the dyadic interval of width 2**-n containing t the tail of the
    series is a rescaled copy of the whole function, so the value equals
    the partial sum at level n plus 2**(-n/2) times the value at the
    fractional part 2**n*t mod 1, which is 1/3 or 2/3 -- both giving
    THIRDS_PEAK.
    """
    n = _thirds_exponent(t)
    if n == 0:
        return THIRDS_PEAK
    hat = TakagiFunction(AllPlus())
    return hat.partial_sum(n, t) + pow2_half(-n) * THIRDS_PEAK


def thirds_value(fn: TakagiFunction, t: Rational) -> QuadValue:
    """Exact value at a point with denominator 3 * 2**n.

    Supported for the all-plus function and the two half-split functions,
    whose values at such points reduce to the all-plus case through the
    reflection identity around t = 1/2.
    """
    t = _as_fraction(t)
    _check_unit_interval(t)
    scheme = fn.scheme
    if isinstance(scheme, AllPlus):
        return _all_plus_thirds(t)
    if isinstance(scheme, HalfSplit):
        if t <= Fraction(1, 2):
            return _all_plus_thirds(t)
        return QuadValue(Fraction(1, 2), 0) - _all_plus_thirds(t - Fraction(1, 2))
    if isinstance(scheme, NegHalfSplit):
        if t <= Fraction(1, 2):
            return -_all_plus_thirds(t)
        return _all_plus_thirds(t - Fraction(1, 2)) - QuadValue(Fraction(1, 2), 0)
    raise ValueError(
        f"thirds evaluation supports all_plus/half_split/neg_half_split, not {scheme.spec}"
    )


# -- coefficient recovery ------------------------------------------------------


def recover_coefficient(f: Evaluable, m: int, k: int) -> QuadValue:
    """Wedge coefficient of any function via its second difference:

        2**(m/2) * (2*f((2k+1)/2**(m+1)) - f(k/2**m) - f((k+1)/2**m))

    For members of this class the result is the scheme's +/-1; for other
    functions it is their Faber--Schauder coefficient.
    """
    if isinstance(f, TakagiFunction):
        ev = f.at_dyadic
    else:
        raw = f

        def ev(t: Fraction) -> QuadValue:
            v = raw(t)
            return v if isinstance(v, QuadValue) else QuadValue(_as_fraction(v), 0)

    mid = ev(Fraction(2 * k + 1, 1 << (m + 1)))
    left = ev(Fraction(k, 1 << m))
    right = ev(Fraction(k + 1, 1 << m))
    return pow2_half(m) * (mid * 2 - left - right)


def recover_rows(fn: TakagiFunction, max_m: int) -> list[np.ndarray]:
    """Recover all coefficients for m <= max_m in bulk, exactly.

    Reads one grid of values at level max_m + 1 and forms the second
    differences per generation; raises if any recovered value is not +/-1.
    """
    level = max_m + 1
    p, q = fn.grid_pairs(level)
    out: list[np.ndarray] = []
    for m in range(max_m + 1):
        step = 1 << (level - m)
        half = step >> 1
        left_p, left_q = p[::step], q[::step]
        mid_p, mid_q = p[half::step], q[half::step]
        dp = 2 * mid_p - left_p[:-1] - left_p[1:]
        dq = 2 * mid_q - left_q[:-1] - left_q[1:]
        # theta = 2**(m/2) * (dp + dq*sqrt2) / 2**level, which is +/-1 iff
        # the rational part matches and the irrational part cancels.
        if m % 2 == 0:
            ok = (dq == 0) & (dp != 0) & (dp * (1 << (m // 2)) == np.sign(dp) * (1 << level))
            theta = np.sign(dp)
        else:
            ok = (dp == 0) & (dq != 0) & (dq * (1 << ((m + 1) // 2)) == np.sign(dq) * (1 << level))
            theta = np.sign(dq)
        if not bool(ok.all()):
            raise ArithmeticError(f"recovered coefficient not +/-1 at generation {m}")
        out.append(theta.astype(np.int64))
    return out

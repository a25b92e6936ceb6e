"""Shared brute-force oracles, deliberately independent of the fast paths.

The library evaluates grids through the vectorized midpoint recursion and
sums increments with integer pairs; these oracles instead loop over every
basis function with Fraction arithmetic, so agreement is a genuine
cross-check rather than the same code run twice.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from takagiqv.qfield import QuadValue
from takagiqv.schauder import eval_e
from takagiqv.takagi import TakagiFunction


def oracle_partial(fn: TakagiFunction, n: int, t: Fraction) -> QuadValue:
    """Full double-loop partial sum: every (m, k), no support shortcuts."""
    acc = QuadValue(0, 0)
    for m in range(n):
        for k in range(1 << m):
            term = eval_e((m, k), t)
            if term:
                acc = acc + term * fn.scheme.theta(m, k)
    return acc


def oracle_grid(fn: TakagiFunction, level: int) -> list[QuadValue]:
    return [
        oracle_partial(fn, level, Fraction(j, 1 << level))
        for j in range((1 << level) + 1)
    ]


def oracle_qv(fn: TakagiFunction, level: int, t: Fraction) -> QuadValue:
    """Direct squared-increment summation over intervals inside [0, t]."""
    vals = oracle_grid(fn, level)
    j_end = int(t * (1 << level))
    acc = QuadValue(0, 0)
    for j in range(j_end):
        d = vals[j + 1] - vals[j]
        acc = acc + d * d
    return acc


def oracle_cov(fx: TakagiFunction, fy: TakagiFunction, level: int, t: Fraction) -> QuadValue:
    vx, vy = oracle_grid(fx, level), oracle_grid(fy, level)
    j_end = int(t * (1 << level))
    acc = QuadValue(0, 0)
    for j in range(j_end):
        acc = acc + (vx[j + 1] - vx[j]) * (vy[j + 1] - vy[j])
    return acc


@pytest.fixture
def frac():
    return Fraction

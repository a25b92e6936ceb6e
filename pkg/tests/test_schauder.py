from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from takagiqv.qfield import Dyadic, QuadValue, SQRT2, pow2_half
from takagiqv.schauder import BasisIndex, eval_e, eval_f, unit_wedge, wedge_peak

grid_ts = st.fractions(min_value=0, max_value=1, max_denominator=96)


def test_unit_wedge_values():
    assert unit_wedge(F(1, 2)) == F(1, 2)
    assert unit_wedge(F(1, 4)) == F(1, 4)
    assert unit_wedge(2) == 0
    assert unit_wedge(F(-1, 3)) == 0


def test_peak_of_unit_wedge():
    assert eval_e((0, 0), F(1, 2)) == QuadValue(F(1, 2), 0)


def test_first_generation_height():
    # height 2**-(m+2)/2 at the peak; m=1 gives 2**-3/2
    assert eval_e((1, 0), F(1, 4)) == QuadValue(0, F(1, 4))


def test_disjoint_supports():
    assert eval_e((1, 1), F(1, 4)) == QuadValue(0, 0)


def test_negative_generation_rejected():
    with pytest.raises(ValueError):
        eval_e((-1, 0), F(1, 2))


@pytest.mark.parametrize(
    "idx,loc,height",
    [
        ((0, 0), Dyadic(1, 1), QuadValue(F(1, 2), 0)),
        ((2, 1), Dyadic(3, 3), QuadValue(F(1, 4), 0)),
        ((3, 5), Dyadic(11, 4), QuadValue(0, F(1, 8))),
    ],
)
def test_wedge_peak(idx, loc, height):
    assert wedge_peak(idx) == (loc, height)


def test_peak_is_attained():
    for m, k in [(0, 0), (1, 0), (2, 3), (4, 7)]:
        loc, height = wedge_peak((m, k))
        assert eval_e((m, k), loc.as_fraction()) == height


class TestWedgePlusChildren:
    def test_quarter_point(self):
        assert eval_f((0, 0), F(1, 4)) == QuadValue(F(1, 4), F(1, 4))

    def test_midpoint(self):
        # both generation-1 wedges vanish at 1/2
        assert eval_f((0, 0), F(1, 2)) == QuadValue(F(1, 2), 0)

    def test_symmetry(self):
        assert eval_f((0, 0), F(3, 4)) == eval_f((0, 0), F(1, 4))

    @pytest.mark.parametrize("m,k", [(0, 0), (1, 1), (3, 2)])
    def test_agrees_with_parent_at_endpoints(self, m, k):
        for t in (F(k, 1 << m), F(k + 1, 1 << m)):
            assert eval_f((m, k), t) == eval_e((m, k), t)

    @pytest.mark.parametrize("m,k", [(0, 0), (2, 1), (5, 9)])
    def test_double_peak_value(self, m, k):
        # peaks at (k + 1/4) 2**-m and (k + 3/4) 2**-m, both (1+sqrt2) 2**-(m+4)/2
        expected = QuadValue(1, 1) * pow2_half(-(m + 4))
        for quarter in (1, 3):
            t = F(4 * k + quarter, 1 << (m + 2))
            assert eval_f((m, k), t) == expected


class TestScalingIdentities:
    @given(grid_ts, st.integers(1, 5), st.integers(0, 31))
    def test_halving_generation(self, t, m, k):
        if k >= 1 << m:
            k %= 1 << m
        assert SQRT2 * eval_e((m, k), t) == eval_e((m - 1, k), 2 * t)

    @given(grid_ts, st.integers(0, 5), st.integers(0, 31), st.integers(-2, 2))
    def test_translation(self, t, m, k, ell):
        if k >= 1 << m:
            k %= 1 << m
        assert eval_e((m, k), t - F(ell, 1 << m)) == eval_e((m, k + ell), t)


@given(st.integers(0, 6), st.integers(0, 63), grid_ts)
def test_support(m, k, t):
    if k >= 1 << m:
        k %= 1 << m
    inside = F(k, 1 << m) < t < F(k + 1, 1 << m)
    v = eval_e((m, k), t)
    if not inside:
        assert v == QuadValue(0, 0)
    elif v == QuadValue(0, 0):
        pytest.fail(f"wedge vanished strictly inside its support: m={m} k={k} t={t}")


def test_basis_index_named_tuple():
    idx = BasisIndex(3, 5)
    assert (idx.m, idx.k) == (3, 5)
    assert eval_e(idx, F(11, 16)) == wedge_peak(idx)[1]
